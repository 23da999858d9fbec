#include <benchmark/benchmark.h>

#include "opineq/linalg.hpp"
#include "opineq/means.hpp"
#include "opineq/sampler.hpp"

using namespace opineq;

static void BM_Eigh(benchmark::State& state) {
  const auto a = sample_constrained(state.range(0), 0.5, 8.0, 1, false);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(a));
}
BENCHMARK(BM_Eigh)->RangeMultiplier(2)->Range(2, 32);

static void BM_MatrixPower(benchmark::State& state) {
  const auto a = sample_constrained(state.range(0), 0.5, 8.0, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power(a, 0.37));
}
BENCHMARK(BM_MatrixPower)->RangeMultiplier(2)->Range(2, 32);

static void BM_GeometricMean(benchmark::State& state) {
  const auto a = sample_constrained(state.range(0), 0.5, 8.0, 3, false);
  const auto b = sample_constrained(state.range(0), 1.0, 4.0, 4, false);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_mean(a, b, 0.3));
}
BENCHMARK(BM_GeometricMean)->RangeMultiplier(2)->Range(2, 32);
BENCHMARK_MAIN();
