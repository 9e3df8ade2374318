#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "coxlab/catalog.hpp"
#include "coxlab/render/svg.hpp"
#include "coxlab/render/tiling.hpp"
#include "coxlab/vinberg/cartan.hpp"
#include "coxlab/vinberg/group.hpp"
#include "coxlab/vinberg/mirror_simplex.hpp"

using namespace coxlab;
using namespace coxlab::vinberg;

namespace {

MirrorSimplex kv_triangle() {
  Eigen::MatrixXd a(3, 3);
  a << 2, -1, -1, -1, 2, -1, -1, -3, 2;
  return tits_simplex(CartanMatrix(a));
}

void BM_GroupH4(benchmark::State& state) {
  const MirrorSimplex s = tits_simplex(cartan_from_coxeter(catalog::instantiate({Family::H, 4, 0}).matrix()));
  EnumerateOptions options;
  options.prefer_exact = false;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(s, 100, options));
}
BENCHMARK(BM_GroupH4)->Unit(benchmark::kMillisecond);

void BM_GroupKacVinberg(benchmark::State& state) {
  const MirrorSimplex s = kv_triangle();
  EnumerateOptions options;
  options.prefer_exact = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(s, static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_GroupKacVinberg)->ArgsProduct({{6, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RenderDepth6(benchmark::State& state) {
  const MirrorSimplex s = kv_triangle();
  for (auto _ : state) benchmark::DoNotOptimize(render::emit_svg(render::tile_orbit(s, 6)));
}
BENCHMARK(BM_RenderDepth6)->Unit(benchmark::kMillisecond);

}  // namespace
