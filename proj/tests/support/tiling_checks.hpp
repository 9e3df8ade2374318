#pragma once

#include <array>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "coxlab/render/tiling.hpp"

namespace testing_support {

inline std::array<double, 3> barycentric(const std::array<Eigen::Vector2d, 3>& t,
                                         const Eigen::Vector2d& p) {
  Eigen::Matrix2d m;
  m.col(0) = t[1] - t[0];
  m.col(1) = t[2] - t[0];
  const Eigen::Vector2d x = m.fullPivLu().solve(p - t[0]);
  return {1.0 - x[0] - x[1], x[0], x[1]};
}

/// Number of sampled interior points of some tile that land strictly inside
/// (beyond tol in every barycentric coordinate) a different tile.
inline int overlapping_samples(const coxlab::render::Tiling2D& t, int samples, double tol,
                               unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, t.tiles.size() - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  for (int k = 0; k < samples; ++k) {
    const std::size_t i = pick(rng);
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    const auto& c = t.tiles[i].chart;
    const Eigen::Vector2d p = a * c[0] + (b - a) * c[1] + (1.0 - b) * c[2];
    for (std::size_t j = 0; j < t.tiles.size(); ++j) {
      if (j == i) continue;
      const auto w = barycentric(t.tiles[j].chart, p);
      if (w[0] > tol && w[1] > tol && w[2] > tol) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

/// Parses the SVG as XML and counts <path> elements under the tile group.
/// Returns -1 when the document does not parse or lacks the expected root.
inline int svg_path_count(const std::string& svg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in(svg);
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error&) {
    return -1;
  }
  const auto root = tree.get_child_optional("svg");
  if (!root || root->get<std::string>("<xmlattr>.version", "") != "1.1") return -1;
  int count = 0;
  for (const auto& [name, g] : *root) {
    if (name != "g") continue;
    for (const auto& [child, node] : g) count += child == "path";
  }
  return count;
}

}  // namespace testing_support
