#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"
#include "support/tiling_checks.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = coxlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriangle = "nodes a b c; edge a b 3; edge b c 3; edge a c 3";

}  // namespace

TEST(Cli, ClassifyAffineTriangle) {
  const Result r = run({"classify", "--dsl", kTriangle});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("~A2 (affine)"), std::string::npos);
  const Result j = run({"classify", "--dsl", kTriangle, "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["components"][0]["type"], "~A2");
  EXPECT_EQ(doc["flags"]["affine"], true);
}

TEST(Cli, EnumerateLannerRank4) {
  const Result r = run({"enumerate", "--mode", "lanner", "--rank", "4", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["count"], 9);
  EXPECT_EQ(doc["diagrams"].size(), 9u);
  for (const auto& d : doc["diagrams"]) EXPECT_EQ(d["flags"]["lanner"], true);
}

TEST(Cli, HitchinDim) {
  const Result r = run({"hitchin-dim", "--n", "2", "--angles", "2,2,2,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Result parse = run({"classify", "--dsl", "nodes a b; edge a c 3"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("1:19"), std::string::npos);
  EXPECT_EQ(run({"cartan", "--matrix", R"([[2,"inf"],[-1,2]])"}).code, 2);
  EXPECT_EQ(run({"classify", "--dsl", kTriangle, "--fixture", "table1_examples/A4"}).code, 2);
  EXPECT_EQ(run({"lanner", "--dsl", kTriangle}).code, 0);
  EXPECT_EQ(run({"lanner", "--dsl", kTriangle, "--strict"}).code, 1);
  EXPECT_EQ(run({"render", "--dsl", kTriangle}).code, 0);
  EXPECT_EQ(run({"render", "--dsl", kTriangle, "--strict"}).code, 1);
  EXPECT_EQ(run({"andreev", "--fixture", "cube", "--strict"}).code, 1);
  EXPECT_EQ(run({"andreev", "--fixture", "dodecahedron", "--strict"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> calls{
      {"enumerate", "--mode", "quasi-lanner", "--rank", "6", "--json"},
      {"render", "--matrix", "[[2,-1,-1],[-1,2,-1],[-1,-3,2]]", "--depth", "5"},
      {"enumerate-group", "--fixture", "table1_examples/H3", "--json"},
      {"realize", "--fixture", "table3_compact_tetrahedra/cycle_4333", "--json"},
      {"andreev", "--fixture", "cube", "--json"},
  };
  for (const auto& c : calls) {
    const Result a = run(c);
    const Result b = run(c);
    EXPECT_EQ(a.code, 0) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
  }
}

TEST(Cli, RenderWritesSvg) {
  const std::string path = ::testing::TempDir() + "coxlab_cli_render.svg";
  const Result r = run({"render", "--matrix", "[[2,-1,-1],[-1,2,-1],[-1,-3,2]]", "--depth", "4",
                        "--svg-out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const int paths = testing_support::svg_path_count(ss.str());
  EXPECT_GT(paths, 1);
  EXPECT_NE(r.out.find("tiles: " + std::to_string(paths)), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, JsonOutputsParse) {
  const std::vector<std::vector<std::string>> calls{
      {"cartan", "--matrix", "[[2,-1,-1],[-1,2,-1],[-4,-1,2]]"},
      {"tits", "--dsl", "nodes a b; edge a b 5"},
      {"anosov", "--dsl", "nodes a b c; edge a b 3; edge b c 3; edge a c inf", "--inf-product", "4.5"},
      {"cc", "--dsl", "nodes a b c; edge a b 3; edge b c 3; edge a c inf"},
      {"perfection", "--fixture", "table4_finite_volume_tetrahedra/cycle_4444"},
      {"kac-vinberg", "--matrix", "[[2,-1,-1],[-1,2,-1],[-4,-1,2]]"},
      {"gram", "--fixture", "table3_compact_tetrahedra/cycle_4333"},
      {"dh-cc", "--dsl", "nodes a b c; edge a b 7; edge b c 3"},
      {"polygon", "--angles", "2,3,7"},
      {"bounds", "--dim", "5", "--right-angled"},
      {"moussong", "--dsl", "nodes a b c d; edge a b inf; edge c d inf"},
      {"lanner", "--fixture", "table1_examples/A4"},
      {"fixtures"},
  };
  for (auto c : calls) {
    c.push_back("--json");
    const Result r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << ": " << r.err;
    EXPECT_NO_THROW((void)nlohmann::json::parse(r.out)) << c[0];
  }
  const auto realize = nlohmann::json::parse(
      run({"realize", "--fixture", "table3_compact_tetrahedra/cycle_4333", "--json"}).out);
  EXPECT_EQ(realize["d"], 3);
  EXPECT_EQ(realize["form"], "diag(+1,+1,+1,-1)");
  EXPECT_EQ(realize["normals"].size(), 4u);
  const auto group = nlohmann::json::parse(
      run({"enumerate-group", "--fixture", "table1_examples/I2_7", "--json"}).out);
  EXPECT_EQ(group["count"], 14);
  EXPECT_TRUE(group["elements"][3].contains("word"));
  EXPECT_TRUE(group["elements"][3].contains("matrix"));
  EXPECT_TRUE(group["elements"][3].contains("length"));
}
