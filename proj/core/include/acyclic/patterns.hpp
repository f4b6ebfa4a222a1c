#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

// Pattern with cached structural facts used by the classifier.
class PatternGraph {
 public:
  explicit PatternGraph(Graph g);

  const Graph& graph() const { return g_; }
  bool is_forest() const { return is_forest_; }
  bool is_bipartite() const { return bipartition_.has_value(); }
  const std::vector<std::vector<int>>& components() const { return components_; }

  // Minimum number of vertices whose removal leaves a forest. Exhaustive by
  // subset size; requires at most 16 vertices.
  int feedback_vertex_number() const;
  bool is_k_acyclic(int k) const;

 private:
  Graph g_;
  bool is_forest_ = false;
  std::optional<std::vector<int>> bipartition_;
  std::vector<std::vector<int>> components_;
  mutable std::optional<int> fvn_;
};

// Injective edge-preserving embedding of pattern into host (not induced).
// Returns host ids indexed by pattern vertex, or nullopt. The pattern may
// have at most 12 vertices.
std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern);

struct SubdividedTreeReport {
  bool contained = false;
  // On success: a tree whose one-per-edge subdivision hosts the pattern,
  // checked constructively.
  std::optional<Graph> witness_tree;
  // On failure: either a cycle, or an odd path joining two branching
  // (degree >= 3) vertices.
  std::optional<std::vector<int>> offending;
  bool offending_is_cycle = false;
};

// Whether the pattern embeds in the subdivision of some tree: it must be a
// forest with no odd-length path between two vertices of degree >= 3.
SubdividedTreeReport is_subdivided_tree_subgraph(const PatternGraph& f);

enum class ObstructionFamily {
  subdivided_tree,   // constant bound regime
  forest,            // degenerate-host regime
  cycle_c4,          // excluded 4-cycle
  cycle_c2t,         // excluded even cycle of length >= 6
  one_acyclic,       // bipartite, one vertex short of a forest
  two_acyclic,       // bipartite, two vertices short of a forest
  dense_lower_bound, // non-bipartite or dense: only the d^(4/3) regime
  general,           // sparse bipartite with no dedicated bound
};

std::string to_string(ObstructionFamily family);

struct ComponentClass {
  ObstructionFamily family = ObstructionFamily::general;
  int t = 0;  // family parameter: vertex count, or half cycle length
  std::vector<int> vertices;
};

struct ClassificationReport {
  std::vector<ComponentClass> components;
  // The component with the fastest-growing regime governs the whole
  // pattern, up to an additive |V| slack.
  ObstructionFamily overall = ObstructionFamily::general;
  int overall_t = 0;
  int additive_slack = 0;  // |V(pattern)|
};

ClassificationReport classify_obstruction(const PatternGraph& f);

// Bound dispatch for a classified family at host max degree delta. Empty
// for regimes with no palette formula (constant, lower-bound, general).
std::optional<BoundReport> dispatch_bound(const ClassificationReport& report, int delta);

}  // namespace acyclic
