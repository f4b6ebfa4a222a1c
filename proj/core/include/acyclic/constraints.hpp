#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

// Set of unordered vertex pairs that a colouring must separate. Stored as
// sorted incidence lists, so it doubles as a graph on the same vertex set.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(int n);
  ConstraintSet(int n, const std::vector<std::pair<int, int>>& pairs);

  int num_vertices() const { return n_; }
  long long size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(int u, int v) const;
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;

  // Pairs as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> pairs() const;

 private:
  int n_ = 0;
  long long size_ = 0;
  std::vector<std::vector<int>> inc_;
};

// All edges of g as constraints (properness).
ConstraintSet edge_constraints(const Graph& g);

// Pairs joined by a directed path of length 1 or 2 in the orientation.
ConstraintSet directed_2path_constraints(const Orientation& o);

// Pairs with at least `threshold` common in-neighbours.
ConstraintSet heavy_in_codegree_constraints(const Orientation& o, double threshold);

// Pairs whose codegree in g is at least max_degree(g)^gamma. Requires
// max_degree >= 2 and gamma in (0, 1).
ConstraintSet gamma_special_pairs(const Graph& g, double gamma);

ConstraintSet constraint_union(const ConstraintSet& a, const ConstraintSet& b);

// Proper colouring of the constraint graph along its reverse peeling order,
// smallest available colour first. Uses at most degeneracy + 1 colours.
Colouring greedy_proper_colouring(const ConstraintSet& cs);

// Same edge-list text format as graphs, for inspection.
void write_constraints(const ConstraintSet& cs, std::ostream& out);
std::string constraints_to_text(const ConstraintSet& cs);

}  // namespace acyclic
