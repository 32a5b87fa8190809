#include <benchmark/benchmark.h>

#include "covmat/covmat.hpp"

namespace {

using namespace covmat;

void BM_BennettBounds(benchmark::State& state) {
  const DensityMatrix rho = bennett_state();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_bounds(rho));
}
BENCHMARK(BM_BennettBounds);

void BM_KyFanCriterion(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const DensityMatrix rho = random_mixed({d, d}, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kf_criterion(rho));
}
BENCHMARK(BM_KyFanCriterion)->DenseRange(2, 6);

void BM_RealignTraceNorm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const DensityMatrix rho = random_mixed({d, d}, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(trace_norm(realign(rho)));
}
BENCHMARK(BM_RealignTraceNorm)->DenseRange(2, 6);

void BM_AllBlocksThreeQutrits(benchmark::State& state) {
  const DensityMatrix rho = random_separable({3, 3, 3}, 6, 3);
  const auto bases = gell_mann_bases(rho.dims());
  for (auto _ : state) benchmark::DoNotOptimize(all_blocks(rho, bases));
}
BENCHMARK(BM_AllBlocksThreeQutrits);

void BM_MultipartiteFullSep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DensityMatrix rho = ghz(n);
  for (auto _ : state) benchmark::DoNotOptimize(multipartite_full_sep(rho));
}
BENCHMARK(BM_MultipartiteFullSep)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
