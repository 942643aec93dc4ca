// Serial reference vs OpenMP run of the verification suite.
// Thread count follows OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "gldiff/suite.hpp"

namespace {

gldiff::SuiteConfig config_for(const benchmark::State& state) {
  gldiff::SuiteConfig config;
  config.samples = state.range(0);
  config.ranks = {1, 2, 3};
  return config;
}

void BM_SuiteSerial(benchmark::State& state) {
  auto config = config_for(state);
  for (auto _ : state) {
    auto report = gldiff::run_suite_serial(config);
    benchmark::DoNotOptimize(report);
    if (!report.all_passed()) state.SkipWithError("suite failed");
  }
  state.SetItemsProcessed(state.iterations() * config.samples);
}

void BM_SuiteParallel(benchmark::State& state) {
  auto config = config_for(state);
  for (auto _ : state) {
    auto report = gldiff::run_suite(config);
    benchmark::DoNotOptimize(report);
    if (!report.all_passed()) state.SkipWithError("suite failed");
  }
  state.SetItemsProcessed(state.iterations() * config.samples);
}

void BM_SingleCheck(benchmark::State& state, const char* name, bool parallel) {
  gldiff::SuiteConfig config;
  config.samples = 200;
  config.checks = std::vector<std::string>{name};
  for (auto _ : state) {
    auto report = parallel ? gldiff::run_suite(config)
                           : gldiff::run_suite_serial(config);
    benchmark::DoNotOptimize(report);
  }
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK_CAPTURE(BM_SingleCheck, jacobi_serial, "central-jacobi", false)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SingleCheck, jacobi_parallel, "central-jacobi", true)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
