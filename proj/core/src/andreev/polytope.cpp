#include "coxlab/andreev/polytope.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxlab/error.hpp"

namespace coxlab::andreev {
namespace {

bool connected_without(int n, const std::vector<std::vector<int>>& adj, int a, int b) {
  int start = 0;
  while (start == a || start == b) ++start;
  std::vector<char> seen(n, 0);
  seen[a] = seen[b] = 1;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n - (a == b ? 1 : 2);
}

}  // namespace

Polytope3::Polytope3(std::vector<std::string> vertices, std::vector<std::vector<int>> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int n = vertex_count();
  if (n < 4 || face_count() < 4) throw InvalidInput("polytope: too few vertices or faces");
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < face_count(); ++f) {
    const auto& face = faces_[f];
    if (face.size() < 3) throw InvalidInput("polytope: face " + std::to_string(f) + " has < 3 vertices");
    std::set<int> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) {
      throw InvalidInput("polytope: face " + std::to_string(f) + " repeats a vertex");
    }
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int u = face[i];
      const int v = face[(i + 1) % face.size()];
      if (u < 0 || u >= n) throw InvalidInput("polytope: vertex index out of range");
      edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  }
  vertex_edges_.assign(n, {});
  std::vector<std::vector<int>> adj(n);
  for (const auto& [key, fs] : edge_faces) {
    if (fs.size() != 2 || fs[0] == fs[1]) {
      throw InvalidInput("polytope: edge (" + vertices_[key.first] + ", " +
                         vertices_[key.second] + ") lies in " + std::to_string(fs.size()) +
                         " face(s), expected 2");
    }
    PolytopeEdge e{key.first, key.second, std::min(fs[0], fs[1]), std::max(fs[0], fs[1])};
    if (face_pair_edge_.contains({e.face_a, e.face_b})) {
      throw InvalidInput("polytope: two faces share more than one edge");
    }
    const int id = static_cast<int>(edges_.size());
    face_pair_edge_[{e.face_a, e.face_b}] = id;
    vertex_edges_[e.u].push_back(id);
    vertex_edges_[e.v].push_back(id);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    edges_.push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    if (vertex_edges_[v].empty()) throw InvalidInput("polytope: vertex " + vertices_[v] + " is unused");
  }
  if (n - edge_count() + face_count() != 2) {
    throw InvalidInput("polytope: Euler characteristic V - E + F = " +
                       std::to_string(n - edge_count() + face_count()) + ", expected 2");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (!connected_without(n, adj, a, b)) {
        throw InvalidInput("polytope: vertex-edge graph is not 3-connected");
      }
    }
  }
}

int Polytope3::edge_between_faces(int f, int g) const {
  const auto it = face_pair_edge_.find({std::min(f, g), std::max(f, g)});
  return it == face_pair_edge_.end() ? -1 : it->second;
}

LabeledPolytope3::LabeledPolytope3(Polytope3 polytope, const std::vector<FaceLabel>& labels)
    : polytope_(std::move(polytope)) {
  using boost::multiprecision::cpp_rational;
  std::vector<char> set(polytope_.edge_count(), 0);
  theta_.assign(polytope_.edge_count(), PiFraction{});
  for (const auto& l : labels) {
    const int e = polytope_.edge_between_faces(l.face_a, l.face_b);
    const std::string where = "(" + std::to_string(l.face_a) + ", " + std::to_string(l.face_b) + ")";
    if (e < 0) throw InvalidInput("label on faces " + where + ", which share no edge");
    if (set[e]) throw InvalidInput("edge between faces " + where + " labeled twice");
    if (l.theta.den <= 0) throw InvalidInput("label " + where + ": non-positive denominator");
    const cpp_rational q(l.theta.num, l.theta.den);
    if (q <= 0 || q > cpp_rational(1, 2)) {
      throw InvalidInput("label " + where + " outside (0, pi/2]");
    }
    set[e] = 1;
    theta_[e] = l.theta;
  }
  for (int e = 0; e < polytope_.edge_count(); ++e) {
    if (!set[e]) {
      const auto& edge = polytope_.edges()[e];
      throw InvalidInput("edge between faces (" + std::to_string(edge.face_a) + ", " +
                         std::to_string(edge.face_b) + ") has no label");
    }
  }
  if (polytope_.is_tetrahedron()) {
    flags_.push_back("tetrahedron: Andreev's theorem does not apply; use the simplex tables");
  }
}

LabeledPolytope3 build_labeled_polytope(std::vector<std::string> vertices,
                                        std::vector<std::vector<int>> faces,
                                        const std::vector<FaceLabel>& labels) {
  return LabeledPolytope3(Polytope3(std::move(vertices), std::move(faces)), labels);
}

}  // namespace coxlab::andreev
