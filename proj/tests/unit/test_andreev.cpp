#include <gtest/gtest.h>

#include <set>

#include "coxlab/andreev/andreev.hpp"
#include "coxlab/error.hpp"
#include "coxlab/json_io.hpp"
#include "support/data_path.hpp"

using namespace coxlab;
using namespace coxlab::andreev;

namespace {

LabeledPolytope3 load(const std::string& name) {
  return json_io::polytope_from_json(json_io::parse(testing_support::read_data("polytopes/" + name + ".json")));
}

// Prism over an n-gon: faces 0 (bottom), 1 (top), 2.. (sides).
LabeledPolytope3 prism(int n, PiFraction side, PiFraction base) {
  std::vector<std::string> v;
  for (int i = 0; i < 2 * n; ++i) v.push_back("v" + std::to_string(i));
  std::vector<std::vector<int>> f(2);
  for (int i = 0; i < n; ++i) {
    f[0].push_back(n - 1 - i);
    f[1].push_back(n + i);
  }
  for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
  std::vector<FaceLabel> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back({0, 2 + i, base});
    labels.push_back({1, 2 + i, base});
    labels.push_back({2 + i, 2 + (i + 1) % n, side});
  }
  return build_labeled_polytope(v, f, labels);
}

using Cycle = std::vector<int>;

Cycle dihedral_min(Cycle c) {
  Cycle best = c;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      best = std::min(best, c);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

// All ordered k-tuples of distinct facets, reduced up to rotation and reflection.
std::set<Cycle> brute_circuits(const Polytope3& p, int k) {
  std::set<Cycle> out;
  const int nf = p.face_count();
  Cycle seq(k);
  auto touch = [&](int a, int b) {
    const auto& x = p.edges()[a];
    const auto& y = p.edges()[b];
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      std::vector<int> edges;
      for (int j = 0; j < k; ++j) {
        const int e = p.edge_between_faces(seq[j], seq[(j + 1) % k]);
        if (e < 0) return;
        edges.push_back(e);
      }
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (touch(edges[a], edges[b])) return;
      out.insert(dihedral_min(seq));
      return;
    }
    for (int f = 0; f < nf; ++f) {
      if (std::find(seq.begin(), seq.begin() + i, f) != seq.begin() + i) continue;
      seq[i] = f;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST(Polytope, Validation) {
  const std::vector<std::string> v{"a", "b", "c", "d"};
  EXPECT_NO_THROW(Polytope3(v, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}));
  EXPECT_THROW(Polytope3(v, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}}), InvalidInput);
  EXPECT_THROW(Polytope3(v, {{0, 1}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}), InvalidInput);
  EXPECT_THROW(Polytope3(v, {{0, 1, 1}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}), InvalidInput);
  const Polytope3 cube = load("cube").polytope();
  EXPECT_EQ(cube.edge_count(), 12);
  EXPECT_THROW(LabeledPolytope3(cube, {}), InvalidInput);
  std::vector<FaceLabel> bad;
  for (const auto& e : cube.edges()) bad.push_back({e.face_a, e.face_b, {2, 3}});
  EXPECT_THROW(LabeledPolytope3(cube, bad), InvalidInput);
}

TEST(Andreev, PrismaticCircuitsMatchBruteForce) {
  std::vector<LabeledPolytope3> cases{load("cube"), load("dodecahedron"),
                                      load("right_triangular_prism"),
                                      load("quadrilateral_pyramid")};
  for (int n = 3; n <= 7; ++n) cases.push_back(prism(n, {1, 3}, {1, 2}));
  for (const auto& lp : cases) {
    for (int k : {3, 4, 5}) {
      std::set<Cycle> got;
      for (const auto& c : prismatic_circuits(lp, k)) {
        EXPECT_TRUE(got.insert(dihedral_min(c.facets)).second);
        EXPECT_EQ(static_cast<int>(c.edges.size()), k);
      }
      EXPECT_EQ(got, brute_circuits(lp.polytope(), k));
    }
  }
}

TEST(Andreev, VertexClasses) {
  const LabeledPolytope3 cube = load("cube");
  EXPECT_EQ(vertex_class(cube, 0), CircuitClass::Spherical);
  const LabeledPolytope3 pyr = load("quadrilateral_pyramid");
  EXPECT_EQ(vertex_class(pyr, 0), CircuitClass::Euclidean);
  EXPECT_EQ(vertex_class(prism(3, {1, 3}, {1, 3}), 0), CircuitClass::Euclidean);
  EXPECT_THROW(vertex_class(cube, 8), PreconditionError);
}

TEST(Andreev, Cube) {
  const AndreevVerdict v = andreev_check(load("cube"), AndreevMode::Compact);
  EXPECT_FALSE(v.realizable);
  EXPECT_TRUE(v.vertices_ok);
  EXPECT_FALSE(v.circuits_ok);
  const auto it = std::find_if(v.witnesses.begin(), v.witnesses.end(), [](const auto& w) {
    return w.circuit && w.circuit->facets.size() == 4 && w.circuit->cls == CircuitClass::Euclidean;
  });
  ASSERT_NE(it, v.witnesses.end());
  EXPECT_EQ(it->circuit->angle_sum.num, 2);
  EXPECT_EQ(it->circuit->angle_sum.den, 1);
}

TEST(Andreev, Dodecahedron) {
  const AndreevVerdict v = andreev_check(load("dodecahedron"), AndreevMode::Compact);
  EXPECT_TRUE(v.realizable);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(Andreev, Exceptions) {
  const AndreevVerdict prism_v = andreev_check(load("right_triangular_prism"), AndreevMode::Compact);
  EXPECT_FALSE(prism_v.realizable);
  EXPECT_TRUE(prism_v.vertices_ok);
  EXPECT_TRUE(prism_v.circuits_ok);
  EXPECT_FALSE(prism_v.graph_connected);
  EXPECT_EQ(prism_v.exception, AndreevException::RightTriangularPrism);

  const AndreevVerdict pyr = andreev_check(load("quadrilateral_pyramid"), AndreevMode::FiniteVolume);
  EXPECT_FALSE(pyr.graph_connected);
  EXPECT_EQ(pyr.exception, AndreevException::QuadrilateralPyramid);
  EXPECT_FALSE(andreev_check(load("quadrilateral_pyramid"), AndreevMode::Compact).vertices_ok);

  EXPECT_THROW(andreev_check(load("tetrahedron"), AndreevMode::Compact), PreconditionError);
  EXPECT_FALSE(load("tetrahedron").flags().empty());
}

TEST(Andreev, PrismFamily) {
  // Pentagonal prism with right base angles: the 4-circuits through both
  // bases are Euclidean and the bases split off W_P.
  const AndreevVerdict v = andreev_check(prism(5, {1, 3}, {1, 2}), AndreevMode::Compact);
  EXPECT_FALSE(v.graph_connected);
  EXPECT_FALSE(v.circuits_ok);
  EXPECT_EQ(v.exception, AndreevException::None);
  // Lowering the base angles makes everything hyperbolic.
  EXPECT_TRUE(andreev_check(prism(5, {1, 2}, {1, 3}), AndreevMode::Compact).realizable);
}
