#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/lorentz/polygon.hpp"

namespace coxlab::andreev {

using lorentz::PiFraction;

struct PolytopeEdge {
  int u = 0;
  int v = 0;
  /// The two faces containing the edge, face_a < face_b.
  int face_a = 0;
  int face_b = 0;
};

/// Combinatorial 3-polytope: vertices, faces as cyclic vertex index lists,
/// and the derived edges.
class Polytope3 {
 public:
  /// Throws InvalidInput on a face with fewer than 3 or repeated vertices, an
  /// edge not shared by exactly two faces, Euler characteristic != 2, an
  /// unused vertex, or a vertex-edge graph that is not 3-connected.
  Polytope3(std::vector<std::string> vertices, std::vector<std::vector<int>> faces);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<int>>& faces() const noexcept { return faces_; }
  const std::vector<PolytopeEdge>& edges() const noexcept { return edges_; }

  /// Index of the edge shared by two faces, or -1.
  int edge_between_faces(int f, int g) const;
  /// Edges at a vertex, in no particular order.
  const std::vector<int>& edges_at(int v) const { return vertex_edges_.at(v); }
  bool is_tetrahedron() const noexcept { return face_count() == 4; }
  int face_size(int f) const { return static_cast<int>(faces_.at(f).size()); }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<PolytopeEdge> edges_;
  std::map<std::pair<int, int>, int> face_pair_edge_;
  std::vector<std::vector<int>> vertex_edges_;
};

struct FaceLabel {
  int face_a = 0;
  int face_b = 0;
  PiFraction theta;
};

/// Polytope with dihedral labels pi * num / den in (0, pi/2] on every edge.
class LabeledPolytope3 {
 public:
  /// Throws InvalidInput when a label names two faces that do not share an
  /// edge, repeats an edge, lies outside (0, pi/2], or some edge is unlabeled.
  LabeledPolytope3(Polytope3 polytope, const std::vector<FaceLabel>& labels);

  const Polytope3& polytope() const noexcept { return polytope_; }
  const PiFraction& theta(int edge) const { return theta_.at(edge); }
  /// Set on tetrahedra, where the polytope theorem does not apply.
  const std::vector<std::string>& flags() const noexcept { return flags_; }

 private:
  Polytope3 polytope_;
  std::vector<PiFraction> theta_;
  std::vector<std::string> flags_;
};

LabeledPolytope3 build_labeled_polytope(std::vector<std::string> vertices,
                                        std::vector<std::vector<int>> faces,
                                        const std::vector<FaceLabel>& labels);

}  // namespace coxlab::andreev
