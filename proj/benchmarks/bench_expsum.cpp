#include <benchmark/benchmark.h>

#include "tsl/expsum.hpp"

static void BM_SAlphaSqrt2(benchmark::State& state) {
  uint64_t N = uint64_t(state.range(0));
  tsl::BMembership mem(N);
  auto a = tsl::Alpha::sqrt2();
  for (auto _ : state) {
    auto r = tsl::s_alpha(a, N, mem);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(N));
}
BENCHMARK(BM_SAlphaSqrt2)->Arg(100000)->Arg(1000000);

static void BM_GridSpectrum(benchmark::State& state) {
  uint64_t N = uint64_t(state.range(0));
  tsl::BMembership mem(N);
  for (auto _ : state) {
    auto g = tsl::grid_spectrum(N, 4 * N, mem);
    benchmark::DoNotOptimize(g[1]);
  }
}
BENCHMARK(BM_GridSpectrum)->Arg(2000)->Arg(10000);
