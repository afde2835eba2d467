#include <benchmark/benchmark.h>

#include "sostree/boundary_laws.hpp"
#include "sostree/broadcast.hpp"
#include "sostree/channel.hpp"
#include "sostree/extremality.hpp"
#include "sostree/recursion.hpp"
#include "sostree/thresholds.hpp"

namespace {

using namespace sostree;

void BM_EnumerateTisgms(benchmark::State& state) {
  const Coupling theta{0.1};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tisgms(theta));
}
BENCHMARK(BM_EnumerateTisgms);

void BM_BuildChannelAndEigen(benchmark::State& state) {
  const Coupling theta{0.2};
  const auto law = enumerate_tisgms(theta).at(4);
  for (auto _ : state) {
    const auto ch = build_channel(theta, law);
    benchmark::DoNotOptimize(analytic_eigenvalues(theta, law));
    benchmark::DoNotOptimize(numeric_eigenvalues(ch));
  }
}
BENCHMARK(BM_BuildChannelAndEigen);

void BM_ClassifyMeasure(benchmark::State& state) {
  const Coupling theta{0.16};
  for (auto _ : state) {
    for (int b : {1, 4, 5, 6, 7}) benchmark::DoNotOptimize(classify_measure(theta, b));
  }
}
BENCHMARK(BM_ClassifyMeasure);

void BM_FixedPointIteration(benchmark::State& state) {
  const TiLaw start{{1.0, 1.0}, 2};
  for (auto _ : state) benchmark::DoNotOptimize(iterate_to_fixed_point(start, Coupling{0.5}, {}));
}
BENCHMARK(BM_FixedPointIteration);

void BM_FindAllThresholds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_all_thresholds());
}
BENCHMARK(BM_FindAllThresholds)->Unit(benchmark::kMillisecond);

void BM_PhaseDiagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phase_diagram(0.05, 0.29, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhaseDiagram)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GammaGrid(benchmark::State& state) {
  const Coupling theta{0.2};
  const auto law = enumerate_tisgms(theta).at(4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_gamma_bound(theta, law, 200));
}
BENCHMARK(BM_GammaGrid)->Unit(benchmark::kMillisecond);

void BM_CensusTv(benchmark::State& state) {
  const auto depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_census_tv(Coupling{3.0}, 1, depth, 1000, 7));
}
BENCHMARK(BM_CensusTv)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
