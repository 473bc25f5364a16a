#include <benchmark/benchmark.h>

#include "jitterdisc/sampler.hpp"

using namespace jitterdisc;

static void BM_Jittered(benchmark::State& state) {
  const auto spec = StratifiedSpec::full_grid(static_cast<int>(state.range(0)), 3);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_jittered(spec, ++seed).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.cell_count()));
}
BENCHMARK(BM_Jittered)->Arg(8)->Arg(32)->Arg(64);

static void BM_Lhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_lhs(n, 5, ++seed).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lhs)->Arg(1024)->Arg(65536);
