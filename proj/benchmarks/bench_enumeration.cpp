#include <benchmark/benchmark.h>

#include "coxlab/lanner.hpp"

namespace {

void BM_EnumerateLanner(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coxlab::enumerate_lanner_family(rank, coxlab::FamilyMode::Lanner));
  }
}
BENCHMARK(BM_EnumerateLanner)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateQuasiLanner(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coxlab::enumerate_lanner_family(rank, coxlab::FamilyMode::QuasiLanner));
  }
}
BENCHMARK(BM_EnumerateQuasiLanner)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateThreads(benchmark::State& state) {
  coxlab::EnumerationOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coxlab::enumerate_lanner_family(7, coxlab::FamilyMode::QuasiLanner, options));
  }
}
BENCHMARK(BM_EnumerateThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
