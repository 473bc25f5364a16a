#include <benchmark/benchmark.h>

#include "jitterdisc/discrepancy.hpp"
#include "jitterdisc/sampler.hpp"

using namespace jitterdisc;

static void BM_Exact2D(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto p = generate_jittered(StratifiedSpec::full_grid(m, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(star_disc_exact(p).value);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p.size()));
}
BENCHMARK(BM_Exact2D)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oNSquared);

static void BM_Exact3D(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto p = generate_jittered(StratifiedSpec::full_grid(m, 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(star_disc_exact(p).value);
}
BENCHMARK(BM_Exact3D)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HeuristicD5(benchmark::State& state) {
  const auto p = generate_jittered(StratifiedSpec::full_grid(3, 5), 1);
  const HeuristicOptions opt{static_cast<int>(state.range(0)), 7};
  for (auto _ : state) benchmark::DoNotOptimize(star_disc_heuristic(p, opt).value);
}
BENCHMARK(BM_HeuristicD5)->Arg(1)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_Certified(benchmark::State& state) {
  const auto p = generate_jittered(StratifiedSpec::full_grid(16, 2), 1);
  const auto cover = CoverSpec::from_grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(star_disc_certified_upper(p, cover).value);
}
BENCHMARK(BM_Certified)->Arg(64)->Arg(256)->Arg(1024);
