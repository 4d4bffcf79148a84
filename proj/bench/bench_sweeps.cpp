#include <benchmark/benchmark.h>

#include "dsga/geometry.hpp"
#include "dsga/operators.hpp"

using namespace dsga;

static void BM_ChartSweep(benchmark::State& st) {
  const bool parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(chart_sweep(1, 10000, parallel));
}
BENCHMARK(BM_ChartSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_LimitSweep(benchmark::State& st) {
  const bool parallel = st.range(0) != 0;
  FieldD f = limit_family(1);
  auto pts = limit_points(1, 64);
  std::vector<double> ells{10, 100, 1000, 10000};
  for (auto _ : st) benchmark::DoNotOptimize(limit_sweep(f, 1.0, ells, pts, parallel).slope);
}
BENCHMARK(BM_LimitSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
