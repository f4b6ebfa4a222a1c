#pragma once

#include <optional>

#include "acyclic/colouring.hpp"
#include "acyclic/constraints.hpp"
#include "acyclic/cycles.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

struct ExactResult {
  std::optional<int> value;  // empty when no palette up to k_max works
  long long nodes_expanded = 0;
  double runtime_ms = 0;
};

// Minimum palette for which every pair of colour classes induces a forest,
// by backtracking over the densest-first vertex order with incremental
// bicoloured-cycle pruning. Hard guard n <= 20.
ExactResult chi_a_exact(const Graph& g, int k_max = 16);

// Ordinary chromatic number; the same search without acyclicity pruning.
ExactResult chi_exact(const Graph& g, int k_max = 16);

struct CountResult {
  long long value = 0;
  long long nodes_expanded = 0;
  double runtime_ms = 0;
};

// Exact number of total k-colourings that separate every cs pair and leave
// no member of fam bicoloured. Labelled count, no symmetry breaking.
// Refuses instances with k^n > 1e8.
CountResult count_acyclic_colourings(const Graph& g, const ConstraintSet& cs,
                                     const CycleFamily& fam, int k);

}  // namespace acyclic
