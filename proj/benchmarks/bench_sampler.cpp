#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "acyclic/constraints.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/random.hpp"
#include "acyclic/sampler.hpp"

using namespace acyclic;

namespace {

Graph two_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    const auto [a, b] = edges[uniform_index(rng, edges.size())];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
  }
  return Graph(n, edges);
}

}  // namespace

static void BM_SampleHeawood(benchmark::State& state) {
  const Graph g = gen_named("heawood");
  const ConstraintSet cs = edge_constraints(g);
  const PiSpec pi = PiSpec::all_even_cycles();
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_colouring(g, cs, pi, static_cast<int>(state.range(0)),
                                              seed++).success);
}
BENCHMARK(BM_SampleHeawood)->Arg(5)->Arg(7)->Arg(9);

static void BM_DegeneratePipeline(benchmark::State& state) {
  const Graph g = two_tree(static_cast<int>(state.range(0)), 17);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(colour_degenerate_pipeline(g, seed++).sample.success);
}
BENCHMARK(BM_DegeneratePipeline)->Arg(50)->Arg(100)->Arg(200);

static void BM_VerifyRegular(benchmark::State& state) {
  const Graph g = *gen_random_regular_girth(40, 3, 5, 23);
  const ConstraintSet cs = edge_constraints(g);
  const PiSpec pi = PiSpec::all_even_cycles();
  const SampleResult res = sample_colouring(g, cs, pi, 6, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_colouring(g, cs, res.colouring, pi).ok);
}
BENCHMARK(BM_VerifyRegular);

BENCHMARK_MAIN();
