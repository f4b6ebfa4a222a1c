#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acyclic {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted, so neighbour queries are binary searches and iteration order is
// deterministic. Self-loops are rejected; parallel edges collapse.
class Graph {
 public:
  static constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  long long num_edges() const { return m_; }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  int max_degree() const { return max_degree_; }
  double average_degree() const;

  // Number of common neighbours of two distinct vertices.
  int codegree(int u, int v) const;

  // Length of a shortest cycle, kInfiniteGirth for forests.
  int girth() const;

  // layers[d] = vertices at distance d from v0; unreachable vertices are
  // in no layer.
  std::vector<std::vector<int>> bfs_layers(int v0) const;

  // Peeling order by repeated minimum degree (ties to the smallest id),
  // together with the degeneracy t: every vertex has at most t neighbours
  // later in the order.
  std::pair<std::vector<int>, int> degeneracy_order() const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on the given vertices, relabelled 0..k-1 in the order
  // given. old_ids, when non-null, receives the reverse mapping.
  Graph induced(std::span<const int> vertices, std::vector<int>* old_ids = nullptr) const;

  std::vector<std::vector<int>> components() const;

  // Sides of a proper 2-colouring, or nullopt if some component is odd.
  std::optional<std::vector<int>> bipartition() const;

  bool is_forest() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<int>> adj_;

  void check_vertex(int v) const;
};

// Orientation of a graph's edges. Built from a vertex order: each edge
// points from its earlier endpoint to its later one, so the digraph is
// acyclic by construction.
class Orientation {
 public:
  Orientation() = default;
  Orientation(const Graph& g, std::span<const int> order);

  int num_vertices() const { return n_; }
  std::span<const int> out_neighbors(int v) const;
  std::span<const int> in_neighbors(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  int max_out_degree() const;
  bool has_arc(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

Orientation orient_by_order(const Graph& g, std::span<const int> order);

struct LoadResult {
  Graph graph;
  int duplicates = 0;  // collapsed parallel edges
};

// Edge-list reader. Lines are "u v"; '#' starts a comment; an optional
// first line "n=<count>" fixes the vertex count (otherwise 1 + max id).
// Throws std::runtime_error with a line number on malformed input.
LoadResult load_graph(std::istream& in);
LoadResult load_graph_text(std::string_view text);
LoadResult load_graph_file(const std::string& path);

void write_graph(const Graph& g, std::ostream& out);
std::string graph_to_text(const Graph& g);

}  // namespace acyclic
