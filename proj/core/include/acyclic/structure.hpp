#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acyclic/graph.hpp"

namespace acyclic {

struct BipartiteCut {
  std::vector<int> side;  // side[v] in {0, 1}
  Graph cut_graph;        // same vertex ids, crossing edges only
};

// Bipartite subgraph keeping at least half the edges, found by single-vertex
// local search on the cut. The cut graph's average degree is therefore at
// least half of g's.
BipartiteCut bipartite_half(const Graph& g);

struct InducedCore {
  Graph graph;                // relabelled 0..k-1
  std::vector<int> vertices;  // original ids, position = new id
};

// Non-empty induced subgraph of minimum degree > floor(average_degree / 2),
// obtained by peeling low-degree vertices. Throws if g has no edges.
InducedCore min_degree_core(const Graph& g);

// Greedy embedding of a tree into g: root maps to v0, children take the
// smallest unused neighbour. Returns the vertex map (tree id -> g id), or
// nullopt when some child cannot be placed. Always succeeds when g's
// minimum degree is at least |V(tree)| - 1.
std::optional<std::vector<int>> embed_rooted_tree(const Graph& g, const Graph& tree,
                                                  int root, int v0);

// Number of edges xy of a bipartite graph with x in part_x whose endpoint
// y (in part_y) has degree at least d. Parts must partition the vertices
// with no edge inside either part, and |part_x| <= |part_y|.
long long branching_edge_count(const Graph& h, std::span<const int> part_x,
                               std::span<const int> part_y, int d);

}  // namespace acyclic
