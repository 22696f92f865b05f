#include <benchmark/benchmark.h>

#include "chowmod/suite.hpp"

namespace {

const std::vector<std::string> kSuites = {"boundary_squared", "rho_reciprocity", "tame_formula"};

chowmod::SuiteOptions options(long size) {
  chowmod::SuiteOptions o;
  for (const auto& s : kSuites) o.sizes[s] = static_cast<std::size_t>(size);
  return o;
}

void BM_SuitesSerial(benchmark::State& state) {
  auto o = options(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chowmod::run_suites_serial(o, kSuites).all_pass());
}

void BM_SuitesParallel(benchmark::State& state) {
  auto o = options(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chowmod::run_suites(o, kSuites).all_pass());
}

}  // namespace

BENCHMARK(BM_SuitesSerial)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuitesParallel)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
