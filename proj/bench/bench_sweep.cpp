// Serial reference against the OpenMP path for the two data-parallel kernels.

#include <benchmark/benchmark.h>

#include "flagspace/sweep.hpp"

using namespace flagspace;

namespace {

void BM_Sweep(benchmark::State& state, Execution exec) {
  const auto checks = all_checks();
  const int max_rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(max_rank, checks, exec));
}

void BM_BruteForceIdeals(benchmark::State& state, Execution exec) {
  // F4 fully marked: 24 realized degrees, 2^24 subsets to filter.
  const auto rs = RootSystem::build({Family::F, 4});
  const auto gs = grade(rs, Marking::parse("1,2,3,4", 4));
  state.counters["degrees"] = static_cast<double>(gs.num_realized());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ideals(gs, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sweep, serial, Execution::serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Execution::parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BruteForceIdeals, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BruteForceIdeals, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
