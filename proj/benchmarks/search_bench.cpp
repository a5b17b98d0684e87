#include <benchmark/benchmark.h>

#include "rbasis/search.hpp"

using namespace rbasis;

namespace {

SearchConfig dowd(Int c, Int target, Strategy s, std::uint64_t budget) {
  return SearchConfig{.pair = {SeqSpec::constant(FiniteSet::single(2)), SeqSpec::interval(1, c), 0, std::nullopt},
                      .target = target,
                      .strategy = s,
                      .budget = budget,
                      .checkpoint_every = 0,
                      .parallel = 0,
                      .tree = {}};
}

}  // namespace

// Whole finite tree (1694 vertices).
static void BM_ExhaustTwoRepresentations(benchmark::State& state) {
  SearchConfig config = dowd(2, 1000, Strategy::dfs_smallest_first, 1'000'000);
  config.parallel = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(config));
}
BENCHMARK(BM_ExhaustTwoRepresentations)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FindIntervalWitness(benchmark::State& state) {
  const SearchConfig config = dowd(100, static_cast<Int>(state.range(0)), Strategy::dfs_smallest_first, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(search(config));
}
BENCHMARK(BM_FindIntervalWitness)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_FixedBudget(benchmark::State& state) {
  const SearchConfig config = dowd(3, Int{1} << 40, static_cast<Strategy>(state.range(0)), 2000);
  for (auto _ : state) benchmark::DoNotOptimize(search(config));
  state.SetLabel(to_string(config.strategy));
}
BENCHMARK(BM_FixedBudget)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
