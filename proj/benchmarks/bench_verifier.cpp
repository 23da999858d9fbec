#include <benchmark/benchmark.h>

#include "opineq/suite.hpp"
#include "opineq/verifier.hpp"

using namespace opineq;

static void BM_CheckCase(benchmark::State& state, const char* id) {
  SuiteConfig config = selftest_config(42);
  config.dims = {static_cast<Index>(state.range(0))};
  const auto c = plan_case(config, find_entry(id), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_case(c));
}
BENCHMARK_CAPTURE(BM_CheckCase, amgm, "amgm")->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_CheckCase, bracket, "thm2.9-phi-outside")->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_CheckCase, reverse_ando, "seo")->Arg(3)->Arg(5);

static void BM_SuiteSlice(benchmark::State& state) {
  SuiteConfig config;
  config.ids = {"thm1.1-phi-inside"};
  config.trials = 10;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(config));
}
BENCHMARK(BM_SuiteSlice);
