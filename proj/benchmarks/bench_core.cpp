#include <benchmark/benchmark.h>

#include "spgauge/chern.hpp"
#include "spgauge/orders.hpp"
#include "spgauge/verify.hpp"

using spgauge::chern::ChMode;

static void BM_ChCoeffClosed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spgauge::chern::ch_coeff(d, d / 2, ChMode::ClosedForm));
  }
}
BENCHMARK(BM_ChCoeffClosed)->Arg(10)->Arg(20)->Arg(40);

static void BM_ChCoeffConvolution(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spgauge::chern::ch_coeff(d, d / 2, ChMode::Convolution));
  }
}
BENCHMARK(BM_ChCoeffConvolution)->Arg(10)->Arg(20)->Arg(40);

static void BM_SamelsonSweep(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int n = 2; n <= max_n; ++n) {
      for (int m = 1; m < n; ++m) {
        benchmark::DoNotOptimize(spgauge::orders::samelson_order(m, n));
      }
    }
  }
}
BENCHMARK(BM_SamelsonSweep)->Arg(10)->Arg(25);

static void BM_InvariantClasses(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(spgauge::orders::count_invariant_classes(5, 300));
  }
}
BENCHMARK(BM_InvariantClasses);

static void BM_DiscrepancyReport(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spgauge::verify::discrepancy_report(max_n));
  }
}
BENCHMARK(BM_DiscrepancyReport)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
