#include <benchmark/benchmark.h>

#include "tsl/factor_sieve.hpp"
#include "tsl/two_squares.hpp"

static void BM_FactorSieveBuild(benchmark::State& state) {
  uint64_t limit = uint64_t(state.range(0));
  for (auto _ : state) {
    auto s = tsl::build_factor_sieve(limit);
    benchmark::DoNotOptimize(s.spf(limit / 2 + 1));
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(limit));
}
BENCHMARK(BM_FactorSieveBuild)->Arg(1 << 20)->Arg(1 << 23);

static void BM_MembershipBuild(benchmark::State& state) {
  uint64_t limit = uint64_t(state.range(0));
  for (auto _ : state) {
    tsl::BMembership mem(limit);
    benchmark::DoNotOptimize(mem.test(limit - 1));
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(limit));
}
BENCHMARK(BM_MembershipBuild)->Arg(1 << 20)->Arg(1 << 23);

static void BM_Factorize(benchmark::State& state) {
  auto s = tsl::build_factor_sieve(1 << 22);
  uint64_t n = 3;
  uint64_t acc = 0;
  for (auto _ : state) {
    acc += s.tau3(n);
    n += 2;
    if (n >= (1 << 22)) n = 3;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Factorize);
