#include "coxlab/andreev/andreev.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxlab/error.hpp"

namespace coxlab::andreev {
namespace {

using boost::multiprecision::cpp_rational;

cpp_rational as_rational(const PiFraction& f) { return cpp_rational(f.num, f.den); }

PiFraction as_fraction(const cpp_rational& q) {
  return {static_cast<std::int64_t>(boost::multiprecision::numerator(q)),
          static_cast<std::int64_t>(boost::multiprecision::denominator(q))};
}

CircuitClass classify_sum(const cpp_rational& sum, int k) {
  const cpp_rational flat = k - 2;
  if (sum > flat) return CircuitClass::Spherical;
  if (sum == flat) return CircuitClass::Euclidean;
  return CircuitClass::Hyperbolic;
}

bool edges_touch(const Polytope3& p, int a, int b) {
  const auto& x = p.edges()[a];
  const auto& y = p.edges()[b];
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

std::string face_list(const std::vector<int>& fs) {
  std::string out = "(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(fs[i]);
  }
  return out + ")";
}

std::string fraction_text(const PiFraction& f) {
  const std::string head = f.num == 1 ? "pi" : std::to_string(f.num) + "pi";
  return f.den == 1 ? head : head + "/" + std::to_string(f.den);
}

bool is_half(const PiFraction& f) { return as_rational(f) == cpp_rational(1, 2); }

AndreevException detect_exception(const LabeledPolytope3& lp) {
  const Polytope3& p = lp.polytope();
  if (p.face_count() != 5) return AndreevException::None;
  std::vector<int> triangles;
  std::vector<int> quads;
  for (int f = 0; f < p.face_count(); ++f) {
    (p.face_size(f) == 3 ? triangles : quads).push_back(f);
  }
  if (p.vertex_count() == 6 && triangles.size() == 2 && quads.size() == 3) {
    for (int e = 0; e < p.edge_count(); ++e) {
      const auto& edge = p.edges()[e];
      const bool base_to_side = (p.face_size(edge.face_a) == 3) != (p.face_size(edge.face_b) == 3);
      if (base_to_side && !is_half(lp.theta(e))) return AndreevException::None;
    }
    return AndreevException::RightTriangularPrism;
  }
  if (p.vertex_count() == 5 && triangles.size() == 4 && quads.size() == 1) {
    const auto& base = p.faces()[quads[0]];
    int apex = 0;
    while (std::find(base.begin(), base.end(), apex) != base.end()) ++apex;
    if (vertex_class(lp, apex) != CircuitClass::Euclidean) return AndreevException::None;
    std::vector<int> base_edges;
    for (std::size_t i = 0; i < 4; ++i) {
      for (int e : p.edges_at(base[i])) {
        const auto& edge = p.edges()[e];
        if ((edge.face_a == quads[0] || edge.face_b == quads[0]) &&
            std::find(base_edges.begin(), base_edges.end(), e) == base_edges.end()) {
          base_edges.push_back(e);
        }
      }
    }
    for (std::size_t i = 0; i < base_edges.size(); ++i) {
      for (std::size_t j = i + 1; j < base_edges.size(); ++j) {
        if (!edges_touch(p, base_edges[i], base_edges[j]) && is_half(lp.theta(base_edges[i])) &&
            is_half(lp.theta(base_edges[j]))) {
          return AndreevException::QuadrilateralPyramid;
        }
      }
    }
  }
  return AndreevException::None;
}

}  // namespace

std::string to_string(CircuitClass c) {
  switch (c) {
    case CircuitClass::Spherical: return "spherical";
    case CircuitClass::Euclidean: return "euclidean";
    case CircuitClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string to_string(AndreevException e) {
  switch (e) {
    case AndreevException::None: return "none";
    case AndreevException::RightTriangularPrism: return "right-triangular-prism";
    case AndreevException::QuadrilateralPyramid: return "quadrilateral-pyramid";
  }
  return "?";
}

std::vector<Circuit> prismatic_circuits(const LabeledPolytope3& lp, int k) {
  if (k < 3) throw PreconditionError("prismatic_circuits: k must be at least 3");
  const Polytope3& p = lp.polytope();
  const int nf = p.face_count();
  std::vector<Circuit> out;
  std::vector<int> seq;
  std::vector<int> edges;
  std::vector<char> used(nf, 0);

  auto disjoint_from_all = [&](int e) {
    return std::none_of(edges.begin(), edges.end(), [&](int x) { return edges_touch(p, x, e); });
  };

  auto dfs = [&](auto&& self) -> void {
    const int last = seq.back();
    if (static_cast<int>(seq.size()) == k) {
      if (seq[1] > seq.back()) return;
      const int closing = p.edge_between_faces(last, seq[0]);
      if (closing < 0 || !disjoint_from_all(closing)) return;
      Circuit c;
      c.facets = seq;
      c.edges = edges;
      c.edges.push_back(closing);
      c.prismatic = true;
      cpp_rational sum = 0;
      for (int e : c.edges) sum += as_rational(lp.theta(e));
      c.angle_sum = as_fraction(sum);
      c.cls = classify_sum(sum, k);
      out.push_back(std::move(c));
      return;
    }
    for (int f = seq[0] + 1; f < nf; ++f) {
      if (used[f]) continue;
      const int e = p.edge_between_faces(last, f);
      if (e < 0 || !disjoint_from_all(e)) continue;
      used[f] = 1;
      seq.push_back(f);
      edges.push_back(e);
      self(self);
      edges.pop_back();
      seq.pop_back();
      used[f] = 0;
    }
  };
  for (int s = 0; s < nf; ++s) {
    seq = {s};
    used[s] = 1;
    dfs(dfs);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.facets < b.facets; });
  return out;
}

CircuitClass vertex_class(const LabeledPolytope3& lp, int v) {
  const Polytope3& p = lp.polytope();
  if (v < 0 || v >= p.vertex_count()) {
    throw PreconditionError("vertex_class: no vertex with index " + std::to_string(v));
  }
  cpp_rational sum = 0;
  for (int e : p.edges_at(v)) sum += as_rational(lp.theta(e));
  return classify_sum(sum, static_cast<int>(p.edges_at(v).size()));
}

std::vector<std::vector<int>> facet_graph_components(const LabeledPolytope3& lp) {
  const Polytope3& p = lp.polytope();
  const int nf = p.face_count();
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < nf; ++f) {
    for (int g = f + 1; g < nf; ++g) {
      const int e = p.edge_between_faces(f, g);
      if (e < 0 || as_rational(lp.theta(e)) < cpp_rational(1, 2)) parent[find(f)] = find(g);
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(nf, -1);
  for (int f = 0; f < nf; ++f) {
    const int r = find(f);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(f);
  }
  return comps;
}

AndreevVerdict andreev_check(const LabeledPolytope3& lp, AndreevMode mode) {
  const Polytope3& p = lp.polytope();
  if (p.is_tetrahedron()) {
    throw PreconditionError(
        "andreev_check: the polytope is a tetrahedron; classify it as a simplex instead");
  }
  AndreevVerdict v;

  v.vertices_ok = true;
  for (int x = 0; x < p.vertex_count(); ++x) {
    const CircuitClass c = vertex_class(lp, x);
    const bool ok = c == CircuitClass::Spherical ||
                    (mode == AndreevMode::FiniteVolume && c == CircuitClass::Euclidean);
    if (ok) continue;
    v.vertices_ok = false;
    AndreevWitness w;
    w.kind = "vertex";
    w.vertex = x;
    w.message = "vertex " + p.vertices()[x] + " is " + to_string(c);
    v.witnesses.push_back(std::move(w));
  }

  v.circuits_ok = true;
  for (int k : {3, 4}) {
    for (auto& c : prismatic_circuits(lp, k)) {
      if (c.cls == CircuitClass::Hyperbolic) continue;
      v.circuits_ok = false;
      AndreevWitness w;
      w.kind = "circuit";
      w.message = "prismatic " + std::to_string(k) + "-circuit " + face_list(c.facets) +
                  " is " + to_string(c.cls) + " (angle sum " + fraction_text(c.angle_sum) + ")";
      w.circuit = std::move(c);
      v.witnesses.push_back(std::move(w));
    }
  }

  const auto comps = facet_graph_components(lp);
  v.graph_connected = comps.size() == 1;
  if (!v.graph_connected) {
    AndreevWitness w;
    w.kind = "graph";
    w.components = comps;
    w.message = "W_P is disconnected: " + std::to_string(comps.size()) + " components";
    v.witnesses.push_back(std::move(w));
    if (v.vertices_ok && v.circuits_ok) v.exception = detect_exception(lp);
  }
  v.realizable = v.vertices_ok && v.circuits_ok && v.graph_connected;
  return v;
}

}  // namespace coxlab::andreev
