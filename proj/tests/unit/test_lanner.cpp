#include <gtest/gtest.h>

#include <random>

#include "coxlab/canonical.hpp"
#include "coxlab/catalog.hpp"
#include "coxlab/classify.hpp"
#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "coxlab/lanner.hpp"
#include "coxlab/moussong.hpp"
#include "support/random_diagrams.hpp"

using namespace coxlab;

namespace {

LannerStatus status(const std::string& dsl) { return lanner_status(parse_diagram(dsl)); }

// Definition-level oracle: inspects every proper subset, not only the
// maximal ones.
LannerStatus brute_status(const CoxeterMatrix& m) {
  const int n = m.rank();
  bool spherical = true;
  bool quasi = true;
  for (NodeMask t = 1; t < full_mask(n); ++t) {
    const bool sph = is_spherical(m, t);
    spherical = spherical && sph;
    quasi = quasi && (sph || is_irreducible_affine(m, t));
  }
  if (determinant(cosine_matrix(m)) >= -1e-9) return LannerStatus::Neither;
  if (spherical) return LannerStatus::Lanner;
  return quasi ? LannerStatus::QuasiLannerNotLanner : LannerStatus::Neither;
}

}  // namespace

TEST(Lanner, Examples) {
  EXPECT_EQ(status("nodes a b c; edge a b 7; edge b c 3"), LannerStatus::Lanner);
  EXPECT_EQ(status("nodes a b c; edge a b 3; edge b c 3; edge a c 3"), LannerStatus::Neither);
  EXPECT_EQ(status("nodes a b c; edge a b inf; edge b c 3"), LannerStatus::QuasiLannerNotLanner);
  EXPECT_EQ(status("nodes a b c d; edge a b 5; edge b c 3; edge c d 5"), LannerStatus::Lanner);
  EXPECT_EQ(status("nodes a b c d; edge a b 4; edge b c 3; edge c d 5"), LannerStatus::Lanner);
  // Affine ~C3: vanishing determinant.
  EXPECT_EQ(status("nodes a b c d; edge a b 4; edge b c 3; edge c d 4"), LannerStatus::Neither);
  // H4 is spherical.
  EXPECT_EQ(status("nodes a b c d; edge a b 5; edge b c 3; edge c d 3"), LannerStatus::Neither);
  EXPECT_EQ(status("nodes a b c d; edge a b 4; edge b c 4; edge c d 4"),
            LannerStatus::QuasiLannerNotLanner);
}

TEST(Lanner, ReportFields) {
  const LannerReport r = lanner_report(parse_diagram("nodes a b c; edge a b 7; edge b c 3"));
  EXPECT_LT(r.determinant, 0.0);
  EXPECT_TRUE(r.proper_spherical);
  EXPECT_TRUE(r.proper_spherical_or_affine);
}

TEST(Lanner, FixtureTables) {
  for (const auto& e : catalog::fixtures("table3_compact_tetrahedra")) {
    EXPECT_EQ(lanner_status(e.diagram), LannerStatus::Lanner) << e.name;
  }
  for (const auto& e : catalog::fixtures("table4_finite_volume_tetrahedra")) {
    EXPECT_EQ(lanner_status(e.diagram), LannerStatus::QuasiLannerNotLanner) << e.name;
  }
}

TEST(Lanner, MatchesAllSubsetsDefinition) {
  std::mt19937 rng(17);
  for (int i = 0; i < 600; ++i) {
    const CoxeterMatrix m =
        testing_support::random_connected(rng, 3 + i % 4, {3, 3, 4, 5, 6, kInfinity}, 0.45);
    EXPECT_EQ(lanner_status(CoxeterDiagram(m)), brute_status(m)) << render_dsl(CoxeterDiagram(m));
  }
}

TEST(Lanner, EnumerationSmallRanks) {
  EXPECT_EQ(enumerate_lanner_family(4, FamilyMode::Lanner).size(), 9u);
  EXPECT_EQ(enumerate_lanner_family(4, FamilyMode::QuasiLanner).size(), 23u);
  EXPECT_EQ(enumerate_lanner_family(5, FamilyMode::Lanner).size(), 5u);
  EXPECT_EQ(enumerate_lanner_family(5, FamilyMode::QuasiLanner).size(), 9u);
  EXPECT_THROW(enumerate_lanner_family(3, FamilyMode::Lanner), PreconditionError);
  EXPECT_THROW(enumerate_lanner_family(11, FamilyMode::Lanner), PreconditionError);
}

TEST(Lanner, EnumerationIndependentOfThreads) {
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions four;
  four.threads = 4;
  for (FamilyMode mode : {FamilyMode::Lanner, FamilyMode::QuasiLanner}) {
    const auto a = enumerate_lanner_family(6, mode, one);
    const auto b = enumerate_lanner_family(6, mode, four);
    EXPECT_EQ(a, b);
  }
}

TEST(Lanner, EnumeratedDiagramsAreDistinctAndCorrect) {
  const auto found = enumerate_lanner_family(4, FamilyMode::QuasiLanner);
  std::set<std::vector<int>> codes;
  for (const auto& d : found) {
    EXPECT_TRUE(codes.insert(canonical_form(d.matrix()).code).second);
    EXPECT_EQ(brute_status(d.matrix()), LannerStatus::QuasiLannerNotLanner);
    EXPECT_TRUE(verify_label_bound(d.matrix()));
  }
}

TEST(Moussong, Examples) {
  auto hyp = [](const std::string& dsl) { return moussong_hyperbolic(parse_diagram(dsl)); };
  EXPECT_TRUE(hyp("nodes a b c; edge a b 7; edge b c 3").hyperbolic);
  EXPECT_TRUE(hyp("nodes a b; edge a b inf").hyperbolic);
  const MoussongResult affine = hyp("nodes a b c; edge a b 3; edge b c 3; edge a c 3");
  EXPECT_FALSE(affine.hyperbolic);
  EXPECT_EQ(affine.witness, MoussongWitness::AffineSubset);
  const MoussongResult pair = hyp("nodes a b c d; edge a b inf; edge c d inf");
  EXPECT_FALSE(pair.hyperbolic);
  EXPECT_EQ(pair.witness, MoussongWitness::OrthogonalPair);
  EXPECT_EQ(pair.first, (std::vector<int>{0, 1}));
  EXPECT_EQ(pair.second, (std::vector<int>{2, 3}));
  // Right-angled pentagon: hyperbolic. Right-angled square: not.
  EXPECT_TRUE(hyp("nodes a b c d e; edge a c inf; edge a d inf; edge b d inf; edge b e inf; "
                  "edge c e inf")
                  .hyperbolic);
  EXPECT_FALSE(hyp("nodes a b c d; edge a c inf; edge b d inf").hyperbolic);
}

TEST(Moussong, LannerGroupsAreHyperbolic) {
  for (const auto& e : catalog::fixtures("table3_compact_tetrahedra")) {
    EXPECT_TRUE(moussong_hyperbolic(e.diagram).hyperbolic) << e.name;
  }
}

TEST(Moussong, ConnectedSubsetsOrder) {
  const CoxeterMatrix m = parse_diagram("nodes a b c; edge a b 3; edge b c 3").matrix();
  const auto subsets = connected_subsets(m);
  EXPECT_EQ(subsets, (std::vector<NodeMask>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111}));
}
