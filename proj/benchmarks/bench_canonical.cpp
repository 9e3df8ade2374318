#include <benchmark/benchmark.h>

#include <random>

#include "coxlab/canonical.hpp"
#include "coxlab/coxeter_matrix.hpp"

namespace {

std::vector<coxlab::CoxeterMatrix> sample(int rank, int count) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> label(0, 5);
  const int labels[] = {2, 2, 3, 4, 5, coxlab::kInfinity};
  std::vector<coxlab::CoxeterMatrix> out;
  for (int i = 0; i < count; ++i) {
    coxlab::CoxeterMatrix m(coxlab::default_node_names(rank));
    for (int s = 0; s < rank; ++s)
      for (int t = s + 1; t < rank; ++t) m.set(s, t, labels[label(rng)]);
    out.push_back(std::move(m));
  }
  return out;
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto ms = sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(coxlab::canonical_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_CanonicalSymmetric(benchmark::State& state) {
  // Edgeless diagrams force the most individualization.
  const coxlab::CoxeterMatrix m(coxlab::default_node_names(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(coxlab::canonical_form(m));
}
BENCHMARK(BM_CanonicalSymmetric)->DenseRange(4, 8, 2);

}  // namespace
