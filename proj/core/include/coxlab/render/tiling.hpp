#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "coxlab/vinberg/group.hpp"
#include "coxlab/vinberg/mirror_simplex.hpp"

namespace coxlab::render {

struct Tile {
  std::vector<int> word;
  /// g(-e_s) for the three generators s.
  std::array<Eigen::Vector3d, 3> projective;
  std::array<Eigen::Vector2d, 3> chart;

  int length() const noexcept { return static_cast<int>(word.size()); }
};

/// Orbit of the fundamental triangle drawn in the affine chart {phi = 1}.
struct Tiling2D {
  /// Unit chart functional; phi(x) > 0 on every tile vertex.
  Eigen::Vector3d phi = Eigen::Vector3d::Zero();
  /// Orthonormal basis of phi's orthogonal complement used for coordinates.
  Eigen::Vector3d axis_x = Eigen::Vector3d::Zero();
  Eigen::Vector3d axis_y = Eigen::Vector3d::Zero();
  /// tiles[0] is the fundamental triangle; order follows the group enumeration.
  std::vector<Tile> tiles;
  int depth = 0;

  Eigen::Vector2d to_chart(const Eigen::Vector3d& x) const;
};

/// Tiles for every group element of word length <= depth. The mirror simplex
/// must have rank 3 and an irreducible Cartan matrix of negative type;
/// anything else is refused with PreconditionError, as is an orbit direction
/// on which the averaged chart functional is not positive.
Tiling2D tile_orbit(const vinberg::MirrorSimplex& s, int depth,
                    const vinberg::EnumerateOptions& options = {});

}  // namespace coxlab::render
