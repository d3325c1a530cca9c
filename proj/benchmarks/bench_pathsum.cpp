#include <benchmark/benchmark.h>

#include <vector>

#include "pathsum/pathsum.hpp"

namespace {

void BM_Multiplicity1D(benchmark::State& state) {
  const auto j = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathsum::multiplicity_1d(pathsum::PathClass1D(10, j)));
  }
}
BENCHMARK(BM_Multiplicity1D)->Arg(10)->Arg(100)->Arg(995);

void BM_LogMultiplicity1D(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pathsum::log_multiplicity_1d(pathsum::PathClass1D(2, state.range(0))));
  }
}
BENCHMARK(BM_LogMultiplicity1D)->Arg(1'000)->Arg(1'000'000);

void BM_KernelSum1D(benchmark::State& state) {
  const double b = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathsum::kernel_sum_1d(b, 2, 1e-15));
  }
}
BENCHMARK(BM_KernelSum1D)->Arg(2)->Arg(100)->Arg(10'000);

void BM_KernelSum2D(benchmark::State& state) {
  const double b = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathsum::kernel_sum_2d(b, 2, 1e-15));
  }
}
BENCHMARK(BM_KernelSum2D)->Arg(2)->Arg(100)->Arg(10'000);

void BM_ThresholdScan(benchmark::State& state) {
  const std::vector<std::int64_t> ms{1, 2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pathsum::threshold_scan(ms, 0.01, 2.0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ThresholdScan)->Arg(200)->Arg(2000);

void BM_Probability1D(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathsum::probability_1d(state.range(0), 0, 1e-12));
  }
}
BENCHMARK(BM_Probability1D)->Arg(2)->Arg(100);

void BM_CountPathsByFlips(benchmark::State& state) {
  const std::vector<std::int64_t> net{2, 1};
  const auto total = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathsum::count_paths_by_flips(net, total));
  }
}
BENCHMARK(BM_CountPathsByFlips)->Arg(7)->Arg(9)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
