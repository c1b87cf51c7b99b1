// Serial reference kernels against the OpenMP ones, and the suite loop at
// one job against all available threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "coronalab/graph.hpp"
#include "coronalab/harness.hpp"

using namespace coronalab;

namespace {

Graph workload(std::size_t n) {
  return corona(generate(FamilySpec::random_gnp(n, 0.08, 5)), generate(FamilySpec::cycle(4))).graph;
}

void BM_DistancesSerial(benchmark::State& state) {
  const Graph g = workload(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::distances(g));
  state.counters["order"] = double(g.order());
}

void BM_DistancesParallel(benchmark::State& state) {
  const Graph g = workload(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distances(g));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_PowerSerial(benchmark::State& state) {
  const Graph g = workload(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::power(g, 3));
}

void BM_PowerParallel(benchmark::State& state) {
  const Graph g = workload(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power(g, 3));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Suite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.checks = {"T1", "T9", "T16", "T17"};
  cfg.jobs = int(state.range(0)) == 0 ? omp_get_max_threads() : int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
  state.counters["jobs"] = cfg.jobs;
}

}  // namespace

BENCHMARK(BM_DistancesSerial)->Arg(40)->Arg(120);
BENCHMARK(BM_DistancesParallel)->Arg(40)->Arg(120);
BENCHMARK(BM_PowerSerial)->Arg(40)->Arg(120);
BENCHMARK(BM_PowerParallel)->Arg(40)->Arg(120);
// 0 = omp_get_max_threads()
BENCHMARK(BM_Suite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
