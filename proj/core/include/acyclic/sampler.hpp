#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/colouring.hpp"
#include "acyclic/constraints.hpp"
#include "acyclic/cycles.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

// Which even cycles must not be bicoloured. Either an explicit family, or
// implicitly every even cycle of the host, narrowed by optional filters:
// cycles with a second-neighbour pair in gamma_free_filter are exempt, as
// are cycles that fail to alternate against antidirected_filter. A spec
// with an explicit family takes no filters.
struct PiSpec {
  std::optional<CycleFamily> explicit_family;
  std::optional<ConstraintSet> gamma_free_filter;
  std::optional<Orientation> antidirected_filter;

  static PiSpec all_even_cycles() { return {}; }
  static PiSpec from_family(CycleFamily fam) {
    PiSpec spec;
    spec.explicit_family = std::move(fam);
    return spec;
  }
};

struct SampleResult {
  bool success = false;
  Colouring colouring;  // partial when success is false
  long long steps = 0;
  std::string last_flaw;
};

// Randomised local correction: vertices are coloured in id order with
// uniform draws; a constraint conflict discards the draw, and a bicoloured
// member cycle through the fresh vertex is broken by uncolouring all but
// two of its vertices. Each draw costs one step; max_steps < 0 means
// 1000 * n * k. Requires k >= max_degree(cs) + 2.
SampleResult sample_colouring(const Graph& g, const ConstraintSet& cs,
                              const PiSpec& pi, int k, std::uint64_t seed,
                              long long max_steps = -1);

struct Verdict {
  bool ok = false;
  std::vector<std::pair<int, int>> constraint_violations;
  std::optional<std::vector<int>> bicoloured_witness;
};

// Full audit of a total colouring against the same inputs the sampler
// takes: every violated constraint pair, plus one bicoloured member cycle
// when any exists.
Verdict verify_colouring(const Graph& g, const ConstraintSet& cs,
                         const Colouring& phi, const PiSpec& pi);

// Pointwise pairing (a, b) -> a * palette(b) + b of two total colourings.
Colouring product_colouring(const Colouring& a, const Colouring& b);

struct PipelineResult {
  Colouring colouring;  // empty when the sampled stage failed
  BoundReport bound;
  SampleResult sample;
  std::optional<Colouring> phi0;  // greedy stage, when the pipeline has one
  std::optional<Colouring> phi1;  // sampled stage
};

// Two-stage acyclic colouring driven by the degeneracy orientation: a
// greedy colouring that splits arcs and directed 2-paths, a sampled
// colouring over heavy-codegree pairs whose member cycles are the
// antidirected, filter-free ones, and the product of the two. The final
// colouring is verified acyclic before returning.
PipelineResult colour_degenerate_pipeline(const Graph& g, std::uint64_t seed,
                                          long long max_steps = -1);

// Single-stage acyclic colouring over edges plus codegree-heavy special
// pairs. The certified palette applies when t >= 3 and delta >= t^3; any
// smaller instance must supply a palette and is marked uncertified.
PipelineResult colour_c2t_pipeline(const Graph& g, int t, std::uint64_t seed,
                                   std::optional<int> palette = std::nullopt,
                                   long long max_steps = -1);

}  // namespace acyclic
