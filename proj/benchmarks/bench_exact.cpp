#include <benchmark/benchmark.h>

#include "acyclic/constraints.hpp"
#include "acyclic/cycles.hpp"
#include "acyclic/exact.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"

using namespace acyclic;

static void BM_ChiAExact(benchmark::State& state) {
  const Graph g = gen_named(state.range(0) == 0 ? "petersen" : "heawood");
  for (auto _ : state) benchmark::DoNotOptimize(chi_a_exact(g).value);
}
BENCHMARK(BM_ChiAExact)->Arg(0)->Arg(1);

static void BM_ChiExact(benchmark::State& state) {
  const Graph g = gen_named("petersen");
  for (auto _ : state) benchmark::DoNotOptimize(chi_exact(g).value);
}
BENCHMARK(BM_ChiExact);

static void BM_CountColourings(benchmark::State& state) {
  const Graph g = gen_named("cycle 6");
  const ConstraintSet cs = edge_constraints(g);
  const CycleFamily fam = enumerate_even_cycles(g, 6);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_acyclic_colourings(g, cs, fam, k).value);
}
BENCHMARK(BM_CountColourings)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
