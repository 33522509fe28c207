#include <benchmark/benchmark.h>

#include "tsl/ternary.hpp"

static void BM_TernaryCount(benchmark::State& state) {
  uint64_t N = uint64_t(state.range(0));
  tsl::BMembership mem(N);
  auto full = tsl::SubsetSpec::full();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsl::ternary_count(N, full, full, mem));
  }
}
BENCHMARK(BM_TernaryCount)->Arg(9999)->Arg(99999)->Arg(999999);

static void BM_PairSumCounts(benchmark::State& state) {
  uint64_t N = uint64_t(state.range(0));
  tsl::BMembership mem(N);
  auto full = tsl::SubsetSpec::full();
  for (auto _ : state) {
    auto r2 = tsl::pair_sum_counts(N, full, full, mem);
    benchmark::DoNotOptimize(r2[N / 2]);
  }
}
BENCHMARK(BM_PairSumCounts)->Arg(9999)->Arg(99999);
