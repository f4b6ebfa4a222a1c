#include <benchmark/benchmark.h>

#include "acyclic/cycles.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"

using namespace acyclic;

static void BM_EnumerateHeawood(benchmark::State& state) {
  const Graph g = gen_named("heawood");
  const int max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const CycleFamily fam = enumerate_even_cycles(g, max_len);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_EnumerateHeawood)->Arg(6)->Arg(10)->Arg(14);

static void BM_EnumerateHypercube(benchmark::State& state) {
  const Graph g = gen_named("hypercube 4");
  for (auto _ : state) {
    const CycleFamily fam = enumerate_even_cycles(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_EnumerateHypercube)->Arg(6)->Arg(8);

static void BM_ProfileSubdividedComplete(benchmark::State& state) {
  const Graph g = gen_subdivision_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const CycleFamily fam = enumerate_even_cycles(g, 10);
    benchmark::DoNotOptimize(cycle_degree_profile(fam).size());
  }
}
BENCHMARK(BM_ProfileSubdividedComplete)->Arg(5)->Arg(6)->Arg(7);

static void BM_CountCyclesThrough(benchmark::State& state) {
  const Graph g = gen_named("heawood");
  for (auto _ : state)
    benchmark::DoNotOptimize(count_cycles_through(g, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountCyclesThrough)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
