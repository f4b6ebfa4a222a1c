#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/constraints.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

// Canonical vertex sequence of a simple cycle: rotated so the minimum id
// comes first, direction chosen so the second id is the smaller of the two
// neighbours of the minimum.
std::vector<int> canonical_cycle(std::span<const int> cycle);

// Deduplicated collection of even simple cycles of one host graph, indexed
// by length and by vertex membership.
class CycleFamily {
 public:
  CycleFamily() = default;
  CycleFamily(const Graph& g, std::vector<std::vector<int>> cycles);

  int num_vertices() const { return n_; }
  std::size_t size() const { return cycles_.size(); }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  const std::vector<int>& cycle(std::size_t id) const { return cycles_.at(id); }

  std::span<const std::size_t> ids_of_length(int len) const;
  std::span<const std::size_t> ids_through(int v) const;
  std::vector<int> lengths() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> cycles_;
  std::map<int, std::vector<std::size_t>> by_length_;
  std::vector<std::vector<std::size_t>> by_vertex_;

  void index();
  friend CycleFamily filter_kept(const CycleFamily&, const std::vector<bool>&);
};

// Every even simple cycle of length 4..max_len. The search counts partial
// paths and throws std::runtime_error when the budget is exceeded.
CycleFamily enumerate_even_cycles(const Graph& g, int max_len,
                                  long long budget = 100'000'000);

// Cycles none of whose second-neighbour pairs (v_i, v_{i+2}) lie in cs.
CycleFamily filter_gamma_free(const CycleFamily& fam, const ConstraintSet& cs);

// Cycles whose arc directions alternate (every vertex a source or a sink).
CycleFamily filter_antidirected(const CycleFamily& fam, const Orientation& o);

// length -> max over vertices of the number of member cycles through it.
std::map<int, int> cycle_degree_profile(const CycleFamily& fam);

// True when colours repeat with period two around the cycle. Throws if any
// cycle vertex is uncoloured.
bool is_bicoloured(std::span<const int> cycle, const Colouring& phi);

// Number of simple cycles of exactly the given length through v0.
long long count_cycles_through(const Graph& g, int v0, int length);

// One cycle per line, comma-separated vertex ids.
void write_cycles(const CycleFamily& fam, std::ostream& out);
std::string cycles_to_text(const CycleFamily& fam);

}  // namespace acyclic
