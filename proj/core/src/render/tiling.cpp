#include "coxlab/render/tiling.hpp"

#include <cmath>

#include "coxlab/error.hpp"
#include "coxlab/vinberg/cartan.hpp"

namespace coxlab::render {

Eigen::Vector2d Tiling2D::to_chart(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d p = x / phi.dot(x);
  return {p.dot(axis_x), p.dot(axis_y)};
}

Tiling2D tile_orbit(const vinberg::MirrorSimplex& s, int depth,
                    const vinberg::EnumerateOptions& options) {
  if (s.rank() != 3) throw PreconditionError("tile_orbit: needs a rank-3 mirror simplex");
  if (!s.cartan.irreducible()) throw PreconditionError("tile_orbit: Cartan matrix is reducible");
  const auto perron = vinberg::perron_type(s.cartan);
  if (perron.type != vinberg::PerronType::Negative) {
    throw PreconditionError("tile_orbit: refused, Cartan matrix is of " +
                            vinberg::to_string(perron.type) +
                            " type and the orbit is not properly convex");
  }

  const vinberg::GroupEnumeration group = vinberg::enumerate_group(s, depth, options);
  Tiling2D t;
  t.depth = depth;
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& g : group.elements) {
    Tile tile;
    tile.word = g.word;
    for (int k = 0; k < 3; ++k) {
      tile.projective[k] = -g.matrix.col(k);
      sum += tile.projective[k].normalized();
    }
    t.tiles.push_back(std::move(tile));
  }
  if (sum.norm() == 0.0) throw PreconditionError("tile_orbit: chart search failed");
  t.phi = sum.normalized();
  for (const auto& tile : t.tiles) {
    for (const auto& x : tile.projective) {
      if (t.phi.dot(x.normalized()) <= 0.0) {
        throw PreconditionError("tile_orbit: chart search failed, an orbit direction has "
                                "non-positive pairing with the averaged functional");
      }
    }
  }
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(t.phi[i]) < std::abs(t.phi[k])) k = i;
  }
  t.axis_x = (Eigen::Vector3d::Unit(k) - t.phi[k] * t.phi).normalized();
  t.axis_y = t.phi.cross(t.axis_x);
  for (auto& tile : t.tiles) {
    for (int i = 0; i < 3; ++i) tile.chart[i] = t.to_chart(tile.projective[i]);
  }
  return t;
}

}  // namespace coxlab::render
