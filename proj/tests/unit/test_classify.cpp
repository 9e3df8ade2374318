#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "coxlab/canonical.hpp"
#include "coxlab/catalog.hpp"
#include "coxlab/classify.hpp"
#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "support/random_diagrams.hpp"

using namespace coxlab;

namespace {

Kind kind_of(const std::string& dsl) {
  const Classification c = classify(parse_diagram(dsl));
  EXPECT_EQ(c.components.size(), 1u);
  return c.components.at(0).type.kind();
}

}  // namespace

TEST(Classify, AffineTriangle) {
  const Classification c = classify(parse_diagram("nodes a b c; edge a b 3; edge b c 3; edge a c 3"));
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_EQ(to_string(c.components[0].type), "~A2");
  EXPECT_TRUE(c.is_affine);
  EXPECT_FALSE(c.is_spherical);
}

TEST(Classify, SmallExamples) {
  EXPECT_EQ(kind_of("nodes a b; edge a b 7"), Kind::Spherical);
  EXPECT_EQ(kind_of("nodes a b; edge a b inf"), Kind::Affine);
  EXPECT_EQ(kind_of("nodes a b c; edge a b 7; edge b c 3"), Kind::Large);
  EXPECT_EQ(kind_of("nodes a b c; edge a b 6; edge b c 3"), Kind::Affine);
  EXPECT_EQ(kind_of("nodes a b c; edge a b 5; edge b c 3"), Kind::Spherical);
  EXPECT_EQ(kind_of("nodes a b c d; edge a b 5; edge b c 3; edge c d 3"), Kind::Spherical);
  EXPECT_EQ(kind_of("nodes a b c d; edge a b 5; edge b c 3; edge c d 4"), Kind::Large);
  EXPECT_EQ(kind_of("nodes a b c d; edge a b 4; edge b c 3; edge c d 4"), Kind::Affine);
}

TEST(Classify, ReducibleDiagram) {
  const Classification c = classify(parse_diagram("nodes a b c d; edge a b 3; edge c d inf"));
  ASSERT_EQ(c.components.size(), 2u);
  EXPECT_EQ(to_string(c.components[0].type), "A2");
  EXPECT_EQ(to_string(c.components[1].type), "~A1");
  EXPECT_FALSE(c.is_spherical);
  EXPECT_FALSE(c.is_affine);
  EXPECT_FALSE(c.is_large_somewhere);
}

TEST(Classify, TypeNamesRoundTrip) {
  for (const TypeTag& t : catalog::irreducible_types(10)) {
    const auto parsed = parse_type(to_string(t));
    ASSERT_TRUE(parsed.has_value()) << to_string(t);
    EXPECT_EQ(*parsed, t);
  }
  EXPECT_FALSE(parse_type("Q7").has_value());
}

// Signature oracle: eigenvalues of the cosine matrix decide the type
// independently of the catalog matching.
TEST(Classify, CatalogAgreesWithSignature) {
  for (const TypeTag& t : catalog::irreducible_types(10)) {
    const CoxeterDiagram d = catalog::instantiate(t);
    EXPECT_EQ(d.rank(), t.node_count());
    EXPECT_EQ(recognize_irreducible_type(d), t) << to_string(t);
    const SignatureTriple s = signature(cosine_matrix(d.matrix()), 1e-9);
    EXPECT_EQ(kind_from_signature(s), t.kind()) << to_string(t) << " " << to_string(s);
  }
}

TEST(Classify, RandomDiagramsAgreeWithSignature) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const CoxeterMatrix m =
        testing_support::random_connected(rng, 1 + i % 7, {3, 3, 3, 4, 5, 6, 8, kInfinity}, 0.4);
    const TypeTag t = recognize_irreducible_type(m);
    const SignatureTriple s = signature(cosine_matrix(m), 1e-9);
    EXPECT_EQ(kind_from_signature(s), t.kind()) << render_dsl(CoxeterDiagram(m));
  }
}

TEST(Classify, SubsetPredicates) {
  const CoxeterMatrix m = parse_diagram("nodes a b c d; edge a b 3; edge b c 3; edge a c 3; edge c d 4").matrix();
  EXPECT_TRUE(is_spherical(m, 0));
  EXPECT_TRUE(is_spherical(m, bit(0) | bit(1)));
  EXPECT_TRUE(is_irreducible_affine(m, bit(0) | bit(1) | bit(2)));
  EXPECT_FALSE(is_spherical(m, full_mask(4)));
  EXPECT_TRUE(is_affine(m, bit(0) | bit(1) | bit(2)));
  EXPECT_FALSE(is_irreducible_affine(m, bit(0) | bit(3)));
}

TEST(Catalog, Fixtures) {
  EXPECT_EQ(catalog::fixtures("table3_compact_tetrahedra").size(), 9u);
  EXPECT_EQ(catalog::fixtures("table4_finite_volume_tetrahedra").size(), 23u);
  EXPECT_EQ(catalog::fixture("table1_examples/H3").rank(), 3);
  EXPECT_THROW(catalog::fixture("nope"), InvalidInput);
  EXPECT_THROW(catalog::instantiate(TypeTag{Family::E, 9, 0}), PreconditionError);
}

TEST(Catalog, Table1FixturesMatchInstantiation) {
  for (const auto& e : catalog::fixtures("table1_examples")) {
    const TypeTag t = recognize_irreducible_type(e.diagram);
    EXPECT_NE(t.kind(), Kind::Large) << e.name;
    EXPECT_TRUE(isomorphic(e.diagram.matrix(), catalog::instantiate(t).matrix())) << e.name;
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 8;
    const CoxeterMatrix m = testing_support::random_connected(rng, n, {3, 4, 5, kInfinity}, 0.35);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CoxeterMatrix p = m.permuted(perm);
    EXPECT_EQ(canonical_form(m).code, canonical_form(p).code);
    EXPECT_EQ(canonical_matrix(m), canonical_matrix(p));
  }
}

// Brute force over all relabelings on small ranks.
TEST(Canonical, MatchesBruteForceIsomorphism) {
  std::mt19937 rng(5);
  auto brute = [](const CoxeterMatrix& a, const CoxeterMatrix& b) {
    const int n = a.rank();
    if (n != b.rank()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool same = true;
      for (int s = 0; s < n && same; ++s) {
        for (int t = 0; t < n && same; ++t) same = a(perm[s], perm[t]) == b(s, t);
      }
      if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  for (int i = 0; i < 400; ++i) {
    const int n = 3 + i % 4;
    const CoxeterMatrix a = testing_support::random_connected(rng, n, {3, 4}, 0.5);
    const CoxeterMatrix b = testing_support::random_connected(rng, n, {3, 4}, 0.5);
    EXPECT_EQ(isomorphic(a, b), brute(a, b));
  }
}
