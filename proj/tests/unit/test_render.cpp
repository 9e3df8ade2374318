#include <gtest/gtest.h>

#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "coxlab/render/svg.hpp"
#include "coxlab/render/tiling.hpp"
#include "coxlab/vinberg/group.hpp"
#include "support/tiling_checks.hpp"

using namespace coxlab;
using namespace coxlab::render;

namespace {

vinberg::MirrorSimplex kv_simplex() {
  Eigen::MatrixXd a(3, 3);
  a << 2, -1, -1, -1, 2, -1, -1, -3, 2;
  return vinberg::tits_simplex(vinberg::CartanMatrix(a));
}

vinberg::MirrorSimplex cosine_simplex(const std::string& dsl) {
  return vinberg::tits_simplex(vinberg::cartan_from_coxeter(parse_diagram(dsl).matrix()));
}

}  // namespace

TEST(Render, KacVinbergTiling) {
  const auto s = kv_simplex();
  const Tiling2D t = tile_orbit(s, 6);
  EXPECT_EQ(t.tiles.size(), vinberg::enumerate_group(s, 6).elements.size());
  EXPECT_TRUE(t.tiles[0].word.empty());
  for (const auto& tile : t.tiles) {
    for (const auto& x : tile.projective) EXPECT_GT(t.phi.dot(x), 0.0);
  }
  EXPECT_EQ(testing_support::overlapping_samples(t, 1000, 1e-7, 1), 0);
  const std::string svg = emit_svg(t);
  EXPECT_EQ(testing_support::svg_path_count(svg), static_cast<int>(t.tiles.size()));
  EXPECT_EQ(svg, emit_svg(tile_orbit(s, 6)));
}

TEST(Render, HyperbolicTriangleOrbitIsInsideTheForm) {
  const auto s = cosine_simplex("nodes a b c; edge a b 7; edge b c 3");
  const Tiling2D t = tile_orbit(s, 6);
  const Eigen::Matrix3d form = s.cartan.matrix().inverse();
  for (const auto& tile : t.tiles) {
    for (const auto& x : tile.projective) EXPECT_LT(x.dot(form * x), 0.0);
  }
  EXPECT_EQ(testing_support::overlapping_samples(t, 1000, 1e-7, 2), 0);
}

TEST(Render, DepthZeroAndStyle) {
  const Tiling2D t = tile_orbit(kv_simplex(), 0);
  ASSERT_EQ(t.tiles.size(), 1u);
  SvgStyle style;
  style.palette = {"#123456", "#abcdef"};
  const std::string svg = emit_svg(t, style);
  EXPECT_EQ(testing_support::svg_path_count(svg), 1);
  EXPECT_NE(svg.find(".d0 { fill: #123456; }"), std::string::npos);
  const std::string deeper = emit_svg(tile_orbit(kv_simplex(), 2), style);
  EXPECT_NE(deeper.find(".d1 { fill: #abcdef; }"), std::string::npos);
  EXPECT_NE(deeper.find(".d2 { fill: #123456; }"), std::string::npos);
}

TEST(Render, Refusals) {
  EXPECT_THROW(tile_orbit(cosine_simplex("nodes a b c; edge a b 3; edge b c 3; edge a c 3"), 3),
               PreconditionError);
  EXPECT_THROW(tile_orbit(cosine_simplex("nodes a b c; edge a b 3; edge b c 3"), 3),
               PreconditionError);
  EXPECT_THROW(tile_orbit(cosine_simplex("nodes a b c; edge a b inf"), 3), PreconditionError);
  EXPECT_THROW(tile_orbit(cosine_simplex("nodes a b c d; edge a b 5; edge b c 3; edge c d 5"), 3),
               PreconditionError);
}
