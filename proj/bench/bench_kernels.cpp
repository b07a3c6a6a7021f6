#include <benchmark/benchmark.h>

#include "hookwalk/perm.hpp"
#include "hookwalk/vhc_sweep.hpp"
#include "hookwalk/walks.hpp"

using namespace hookwalk;

static void BM_CountWalks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_walks(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountWalks)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_CountWalksReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_walks_reference(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountWalksReference)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TallyVhcs(benchmark::State& state) {
  const Permutation sigma = Permutation::parse("312");
  for (auto _ : state) benchmark::DoNotOptimize(tally_vhcs(static_cast<int>(state.range(0)), sigma));
}
BENCHMARK(BM_TallyVhcs)->Arg(9)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_TallyVhcsReference(benchmark::State& state) {
  const Permutation sigma = Permutation::parse("312");
  for (auto _ : state)
    benchmark::DoNotOptimize(tally_vhcs_reference(static_cast<int>(state.range(0)), sigma));
}
BENCHMARK(BM_TallyVhcsReference)->Arg(9)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
