#include <gtest/gtest.h>

#include "coxlab/catalog.hpp"
#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "coxlab/hitchin.hpp"
#include "coxlab/lorentz/gram.hpp"
#include "coxlab/lorentz/polygon.hpp"

using namespace coxlab;
using namespace coxlab::lorentz;

namespace {

GramMatrix gram(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index k = 0;
    for (double x : r) m(i, k++) = x;
    ++i;
  }
  return GramMatrix(m);
}

}  // namespace

TEST(Gram, Validation) {
  EXPECT_THROW(gram({{1, -0.5}, {-0.5, 2}}), InvalidInput);
  EXPECT_THROW(gram({{1, 0.5}, {0.5, 1}}), InvalidInput);
  EXPECT_THROW(gram({{1, -0.5}, {-0.4, 1}}), InvalidInput);
  const GramReport r = validate_gram(gram_from_coxeter(parse_diagram("nodes a b c; edge a b 7; edge b c 3").matrix()));
  EXPECT_TRUE(r.vinberg_ok);
  EXPECT_EQ(r.d, 2);
  const GramReport sph = validate_gram(gram_from_coxeter(catalog::fixture("table1_examples/A4").matrix()));
  EXPECT_FALSE(sph.vinberg_ok);
  EXPECT_FALSE(sph.problems.empty());
  const GramReport red = validate_gram(gram({{1, 0, 0}, {0, 1, -2}, {0, -2, 1}}));
  EXPECT_FALSE(red.irreducible);
  EXPECT_FALSE(red.vinberg_ok);
}

TEST(Gram, TetrahedraRealize) {
  for (const char* cat : {"table3_compact_tetrahedra", "table4_finite_volume_tetrahedra"}) {
    for (const auto& e : catalog::fixtures(cat)) {
      const GramMatrix g = gram_from_coxeter(e.diagram.matrix());
      const GramReport r = validate_gram(g);
      EXPECT_TRUE(r.vinberg_ok) << e.name;
      EXPECT_EQ(r.d, 3) << e.name;
      const LorentzRealization real = realize_normals(g);
      EXPECT_EQ(real.d, 3);
      EXPECT_LT(real.reconstruction_error(g), 1e-9) << e.name;
      const auto refl = reflections_lorentz(real);
      EXPECT_LT(form_preservation_error(real, refl), 1e-9) << e.name;
      // Each reflection fixes its own normal's orthogonal complement and negates the normal.
      for (std::size_t i = 0; i < refl.size(); ++i) {
        EXPECT_LT((refl[i] * real.normals[i] + real.normals[i]).norm(), 1e-9);
      }
    }
  }
}

TEST(Gram, DegenerateAndRefused) {
  const GramMatrix parallel = gram({{1, -1}, {-1, 1}});
  const LorentzRealization r = realize_normals(parallel);
  EXPECT_EQ(r.d, 1);
  EXPECT_LT(r.reconstruction_error(parallel), 1e-12);
  // Two negative directions.
  EXPECT_THROW(realize_normals(gram({{1, -3, 0, 0}, {-3, 1, 0, 0}, {0, 0, 1, -3}, {0, 0, -3, 1}})),
               PreconditionError);
}

TEST(Gram, DhConvexCocompact) {
  const CoxeterMatrix t237 = parse_diagram("nodes a b c; edge a b 7; edge b c 3").matrix();
  EXPECT_TRUE(dh_convex_cocompact(t237, gram_from_coxeter(t237)).convex_cocompact);

  const CoxeterMatrix t33inf = parse_diagram("nodes a b c; edge a b 3; edge b c 3; edge a c inf").matrix();
  const DhReport touching = dh_convex_cocompact(t33inf, gram_from_coxeter(t33inf));
  EXPECT_FALSE(touching.convex_cocompact);
  ASSERT_EQ(touching.asymptotic_pairs.size(), 1u);
  EXPECT_EQ(touching.asymptotic_pairs[0], std::make_pair(0, 2));
  Eigen::MatrixXd g = gram_from_coxeter(t33inf).matrix();
  g(0, 2) = g(2, 0) = -1.5;
  EXPECT_TRUE(dh_convex_cocompact(t33inf, GramMatrix(g)).convex_cocompact);
  g(0, 1) = g(1, 0) = -0.4;
  EXPECT_THROW(dh_convex_cocompact(t33inf, GramMatrix(g)), PreconditionError);
}

TEST(Polygon, Existence) {
  auto exists = [](std::vector<PiFraction> a) { return polygon_exists(a); };
  EXPECT_TRUE(exists({{1, 2}, {1, 3}, {1, 7}}));
  EXPECT_FALSE(exists({{1, 2}, {1, 3}, {1, 6}}));
  EXPECT_FALSE(exists({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  EXPECT_TRUE(exists({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  EXPECT_THROW(exists({{1, 2}, {1, 3}}), PreconditionError);
  EXPECT_THROW(exists({{1, 1}, {1, 3}, {1, 3}}), PreconditionError);
  const std::vector<double> rad{M_PI / 2, M_PI / 3, M_PI / 7};
  EXPECT_TRUE(polygon_exists(std::span<const double>(rad)));
}

TEST(Bounds, KnownDimensions) {
  EXPECT_EQ(dimension_bounds(30, true, false).feasibility, Feasibility::Impossible);
  EXPECT_EQ(dimension_bounds(8, true, false).feasibility, Feasibility::PossibleKnownExample);
  EXPECT_EQ(dimension_bounds(9, true, false).feasibility, Feasibility::Unknown);
  EXPECT_EQ(dimension_bounds(996, false, false).feasibility, Feasibility::Impossible);
  EXPECT_EQ(dimension_bounds(21, false, false).feasibility, Feasibility::PossibleKnownExample);
  EXPECT_EQ(dimension_bounds(20, false, false).feasibility, Feasibility::Unknown);
  EXPECT_EQ(dimension_bounds(5, true, true).feasibility, Feasibility::Impossible);
  EXPECT_EQ(dimension_bounds(4, true, true).feasibility, Feasibility::PossibleKnownExample);
  EXPECT_EQ(dimension_bounds(13, false, true).feasibility, Feasibility::Impossible);
  EXPECT_EQ(dimension_bounds(8, false, true).feasibility, Feasibility::PossibleKnownExample);
  EXPECT_EQ(dimension_bounds(10, false, true).feasibility, Feasibility::Unknown);
  EXPECT_EQ(dimension_bounds(10, false, true).bound, 12);
  EXPECT_THROW(dimension_bounds(1, true, false), PreconditionError);
}

TEST(Hitchin, ClosedForms) {
  for (int k = 5; k <= 10; ++k) {
    const std::vector<int> right(k, 2);
    for (int n = 2; n <= 7; ++n) {
      const std::int64_t m = n / 2;
      const std::int64_t expected = n % 2 == 0 ? (k - 4) * m * m + 1 : (k - 4) * (m * m + m);
      EXPECT_EQ(hitchin_dimension(n, right), expected) << "k=" << k << " n=" << n;
    }
  }
  const std::vector<int> t237{2, 3, 7};
  EXPECT_EQ(hitchin_dimension(2, t237), 0);
  EXPECT_EQ(hitchin_dimension(3, t237), 0);
  const std::vector<int> euclid{2, 3, 6};
  EXPECT_THROW(hitchin_dimension(2, euclid), PreconditionError);
  EXPECT_THROW(hitchin_dimension(1, t237), PreconditionError);
}
