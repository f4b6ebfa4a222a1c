#include "acyclic/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace acyclic {

BipartiteCut bipartite_half(const Graph& g) {
  if (g.num_edges() == 0) throw std::invalid_argument("bipartite_half: graph has no edges");
  const int n = g.num_vertices();
  std::vector<int> side(n, 0);
  // Move any vertex with more same-side than cross neighbours; each move
  // raises the cut, so this terminates at a local optimum where every
  // vertex has at least half its edges crossing.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int cross = 0;
      for (int u : g.neighbors(v))
        if (side[u] != side[v]) ++cross;
      if (2 * cross < g.degree(v)) {
        side[v] = 1 - side[v];
        moved = true;
      }
    }
  }
  std::vector<std::pair<int, int>> cut_edges;
  for (auto [u, v] : g.edges())
    if (side[u] != side[v]) cut_edges.emplace_back(u, v);
  return BipartiteCut{std::move(side), Graph(n, cut_edges)};
}

InducedCore min_degree_core(const Graph& g) {
  if (g.num_edges() == 0) throw std::invalid_argument("min_degree_core: graph has no edges");
  const int n = g.num_vertices();
  // Threshold floor(d/2) = floor(m/n); peel everything at or below it.
  const long long threshold = g.num_edges() / n;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= threshold) {
      removed[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--deg[u] <= threshold) {
        removed[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  if (keep.empty())
    throw std::runtime_error("min_degree_core: peeling removed every vertex");
  InducedCore core;
  core.graph = g.induced(keep, &core.vertices);
  return core;
}

std::optional<std::vector<int>> embed_rooted_tree(const Graph& g, const Graph& tree,
                                                  int root, int v0) {
  const int k = tree.num_vertices();
  if (!tree.is_forest() || tree.num_edges() != k - 1)
    throw std::invalid_argument("embed_rooted_tree: pattern is not a tree");
  if (root < 0 || root >= k) throw std::invalid_argument("embed_rooted_tree: bad root");
  if (v0 < 0 || v0 >= g.num_vertices()) throw std::invalid_argument("embed_rooted_tree: bad v0");

  // DFS order from the root, smaller children first.
  std::vector<int> order, parent(k, -1);
  std::vector<int> stack{root};
  std::vector<bool> seen(k, false);
  seen[root] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    auto nb = tree.neighbors(x);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = true;
        parent[*it] = x;
        stack.push_back(*it);
      }
  }

  std::vector<int> map(k, -1);
  std::vector<bool> used(g.num_vertices(), false);
  map[root] = v0;
  used[v0] = true;
  for (int x : order) {
    if (x == root) continue;
    int anchor = map[parent[x]];
    int pick = -1;
    for (int u : g.neighbors(anchor))
      if (!used[u]) {
        pick = u;
        break;
      }
    if (pick < 0) return std::nullopt;
    map[x] = pick;
    used[pick] = true;
  }
  return map;
}

long long branching_edge_count(const Graph& h, std::span<const int> part_x,
                               std::span<const int> part_y, int d) {
  const int n = h.num_vertices();
  if (part_x.size() > part_y.size())
    throw std::invalid_argument("branching_edge_count: |X| must not exceed |Y|");
  std::vector<int> which(n, -1);
  for (int v : part_x) {
    if (v < 0 || v >= n || which[v] >= 0)
      throw std::invalid_argument("branching_edge_count: bad part X");
    which[v] = 0;
  }
  for (int v : part_y) {
    if (v < 0 || v >= n || which[v] >= 0)
      throw std::invalid_argument("branching_edge_count: bad part Y");
    which[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (which[v] < 0) throw std::invalid_argument("branching_edge_count: parts must cover h");
  for (auto [u, v] : h.edges())
    if (which[u] == which[v])
      throw std::invalid_argument("branching_edge_count: edge inside a part");

  long long count = 0;
  for (int x : part_x)
    for (int y : h.neighbors(x))
      if (h.degree(y) >= d) ++count;
  return count;
}

}  // namespace acyclic
