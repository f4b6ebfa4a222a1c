#include "acyclic/patterns.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "acyclic/generators.hpp"

namespace acyclic {

PatternGraph::PatternGraph(Graph g)
    : g_(std::move(g)),
      is_forest_(g_.is_forest()),
      bipartition_(g_.bipartition()),
      components_(g_.components()) {}

namespace {

bool acyclic_without(const Graph& g, unsigned removed_mask) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    if ((removed_mask >> u) & 1u) continue;
    if ((removed_mask >> v) & 1u) continue;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace

int PatternGraph::feedback_vertex_number() const {
  if (fvn_) return *fvn_;
  const int n = g_.num_vertices();
  if (n > 16)
    throw std::invalid_argument("feedback_vertex_number: at most 16 vertices supported");
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    if (acyclic_without(g_, mask)) best = size;
  }
  fvn_ = best;
  return best;
}

bool PatternGraph::is_k_acyclic(int k) const {
  if (k < 0) throw std::invalid_argument("is_k_acyclic: negative k");
  return feedback_vertex_number() <= k;
}

namespace {

struct EmbedSearch {
  const Graph& host;
  const Graph& pattern;
  const std::vector<int>& order;  // pattern vertices, placement order
  std::vector<int> map;           // pattern id -> host id
  std::vector<bool> used;

  bool place(std::size_t i) {
    if (i == order.size()) return true;
    const int p = order[i];
    // Collect pattern neighbours already placed; their images constrain p.
    int anchor = -1;
    for (int q : pattern.neighbors(p))
      if (map[q] >= 0) {
        anchor = map[q];
        break;
      }
    auto try_host = [&](int h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) return false;
      for (int q : pattern.neighbors(p))
        if (map[q] >= 0 && !host.has_edge(h, map[q])) return false;
      map[p] = h;
      used[h] = true;
      if (place(i + 1)) return true;
      map[p] = -1;
      used[h] = false;
      return false;
    };
    if (anchor >= 0) {
      for (int h : host.neighbors(anchor))
        if (try_host(h)) return true;
    } else {
      for (int h = 0; h < host.num_vertices(); ++h)
        if (try_host(h)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern) {
  const int k = pattern.num_vertices();
  if (k > 12) throw std::invalid_argument("contains_subgraph: pattern exceeds 12 vertices");
  if (k == 0) return std::vector<int>{};

  // Place high-degree vertices first, then grow the placed region so most
  // candidates come from host adjacency lists.
  std::vector<int> order;
  std::vector<bool> chosen(k, false);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1;
    for (int p = 0; p < k; ++p) {
      if (chosen[p]) continue;
      int links = 0;
      for (int q : pattern.neighbors(p))
        if (chosen[q]) ++links;
      if (best < 0 || links > best_links ||
          (links == best_links && pattern.degree(p) > pattern.degree(best))) {
        best = p;
        best_links = links;
      }
    }
    chosen[best] = true;
    order.push_back(best);
  }

  EmbedSearch search{host, pattern, order, std::vector<int>(k, -1),
                     std::vector<bool>(host.num_vertices(), false)};
  if (search.place(0)) return search.map;
  return std::nullopt;
}

namespace {

// Any cycle of a non-forest, as a vertex sequence.
std::vector<int> find_cycle(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(n, -2);
  for (int s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (y == parent[x]) continue;
        if (parent[y] == -2) {
          parent[y] = x;
          stack.push_back(y);
        } else {
          // Two tree paths to a common ancestor close a cycle.
          std::vector<int> px{x}, py{y};
          auto extend = [&](std::vector<int>& path) {
            while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
          };
          extend(px);
          extend(py);
          // Trim the shared tail above the lowest common vertex.
          std::vector<bool> on_px(n, false);
          for (int v : px) on_px[v] = true;
          int meet = -1;
          for (int v : py)
            if (on_px[v]) {
              meet = v;
              break;
            }
          std::vector<int> cycle;
          for (int v : px) {
            cycle.push_back(v);
            if (v == meet) break;
          }
          std::vector<int> back;
          for (int v : py) {
            if (v == meet) break;
            back.push_back(v);
          }
          std::reverse(back.begin(), back.end());
          cycle.insert(cycle.end(), back.begin(), back.end());
          if (cycle.size() >= 3) return cycle;
        }
      }
    }
  }
  throw std::logic_error("find_cycle: no cycle in a non-forest");
}

}  // namespace

SubdividedTreeReport is_subdivided_tree_subgraph(const PatternGraph& f) {
  const Graph& g = f.graph();
  SubdividedTreeReport report;
  if (!f.is_forest()) {
    report.offending = find_cycle(g);
    report.offending_is_cycle = true;
    return report;
  }

  const int n = g.num_vertices();
  std::vector<int> parity(n, -1), parent(n, -1);
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<int> tree_id(n, -1);
  int next_id = 0;
  std::vector<int> piece_roots;

  for (const auto& comp : f.components()) {
    int root = comp[0];
    for (int v : comp)
      if (g.degree(v) >= 3) {
        root = v;
        break;
      }
    // BFS parities from the root; equal parity means even tree distance.
    parity[root] = 0;
    std::vector<int> frontier{root};
    std::vector<int> bfs_order{root};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int y : g.neighbors(x))
          if (parity[y] < 0) {
            parity[y] = 1 - parity[x];
            parent[y] = x;
            next.push_back(y);
            bfs_order.push_back(y);
          }
      frontier = std::move(next);
    }
    for (int v : comp)
      if (g.degree(v) >= 3 && parity[v] == 1) {
        // Unique tree path root..v has odd length and branching endpoints.
        std::vector<int> path{v};
        while (path.back() != root) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        report.offending = std::move(path);
        report.offending_is_cycle = false;
        return report;
      }

    // Even-parity vertices become tree vertices; each odd-parity vertex has
    // degree <= 2 here and turns into the midpoint of one tree edge.
    for (int v : bfs_order)
      if (parity[v] == 0) tree_id[v] = next_id++;
    piece_roots.push_back(tree_id[root]);
    for (int v : bfs_order) {
      if (parity[v] != 1) continue;
      auto nb = g.neighbors(v);
      if (nb.size() == 2) {
        tree_edges.emplace_back(tree_id[nb[0]], tree_id[nb[1]]);
      } else {
        tree_edges.emplace_back(tree_id[nb[0]], next_id++);  // padded leaf
      }
    }
  }

  if (next_id == 0) piece_roots.push_back(next_id++);  // empty pattern
  for (std::size_t i = 1; i < piece_roots.size(); ++i)
    tree_edges.emplace_back(piece_roots[i - 1], piece_roots[i]);

  Graph tree(next_id, tree_edges);
  if (!tree.is_forest() || tree.num_edges() != next_id - 1)
    throw std::logic_error("is_subdivided_tree_subgraph: witness is not a tree");
  if (n <= 12 && !contains_subgraph(gen_one_subdivision(tree), g))
    throw std::logic_error("is_subdivided_tree_subgraph: witness check failed");
  report.contained = true;
  report.witness_tree = std::move(tree);
  return report;
}

std::string to_string(ObstructionFamily family) {
  switch (family) {
    case ObstructionFamily::subdivided_tree: return "subdivided_tree";
    case ObstructionFamily::forest: return "forest";
    case ObstructionFamily::cycle_c4: return "cycle_c4";
    case ObstructionFamily::cycle_c2t: return "cycle_c2t";
    case ObstructionFamily::one_acyclic: return "1acyclic";
    case ObstructionFamily::two_acyclic: return "2acyclic";
    case ObstructionFamily::dense_lower_bound: return "dense_lower_bound";
    case ObstructionFamily::general: return "general";
  }
  return "unknown";
}

namespace {

// Growth rank of each regime; the largest one governs the union.
int family_rank(ObstructionFamily f) {
  switch (f) {
    case ObstructionFamily::subdivided_tree: return 0;
    case ObstructionFamily::forest: return 1;
    case ObstructionFamily::cycle_c4: return 2;
    case ObstructionFamily::cycle_c2t: return 3;
    case ObstructionFamily::one_acyclic: return 4;
    case ObstructionFamily::two_acyclic: return 5;
    case ObstructionFamily::general: return 6;
    case ObstructionFamily::dense_lower_bound: return 7;
  }
  return 7;
}

ComponentClass classify_component(const Graph& g, const std::vector<int>& vertices) {
  ComponentClass out;
  out.vertices = vertices;
  Graph comp = g.induced(vertices);
  PatternGraph pattern(comp);
  const int n = comp.num_vertices();
  const long long m = comp.num_edges();

  if (is_subdivided_tree_subgraph(pattern).contained) {
    out.family = ObstructionFamily::subdivided_tree;
    out.t = n;
    return out;
  }
  if (pattern.is_forest()) {
    out.family = ObstructionFamily::forest;
    out.t = n;
    return out;
  }
  const bool is_cycle = (m == n) && comp.max_degree() == 2;
  if (is_cycle && n % 2 == 0) {
    out.family = n == 4 ? ObstructionFamily::cycle_c4 : ObstructionFamily::cycle_c2t;
    out.t = n / 2;
    return out;
  }
  if (pattern.is_bipartite() && pattern.is_k_acyclic(1)) {
    out.family = ObstructionFamily::one_acyclic;
    out.t = n;
    return out;
  }
  if (pattern.is_bipartite() && pattern.is_k_acyclic(2)) {
    out.family = ObstructionFamily::two_acyclic;
    out.t = n;
    return out;
  }
  if (!pattern.is_bipartite() || m > 4 * static_cast<long long>(n)) {
    out.family = ObstructionFamily::dense_lower_bound;
    out.t = n;
    return out;
  }
  out.family = ObstructionFamily::general;
  out.t = n;
  return out;
}

}  // namespace

ClassificationReport classify_obstruction(const PatternGraph& f) {
  ClassificationReport report;
  report.additive_slack = f.graph().num_vertices();
  for (const auto& comp : f.components())
    report.components.push_back(classify_component(f.graph(), comp));
  if (report.components.empty()) {
    report.overall = ObstructionFamily::subdivided_tree;
    report.overall_t = 0;
    return report;
  }
  const ComponentClass* worst = &report.components.front();
  for (const auto& c : report.components)
    if (family_rank(c.family) > family_rank(worst->family)) worst = &c;
  report.overall = worst->family;
  report.overall_t = worst->t;
  return report;
}

std::optional<BoundReport> dispatch_bound(const ClassificationReport& report, int delta) {
  switch (report.overall) {
    case ObstructionFamily::forest:
      return bound_forest(delta, report.overall_t);
    case ObstructionFamily::cycle_c4:
      return bound_c4free(delta);
    case ObstructionFamily::cycle_c2t:
      return bound_c2t(delta, report.overall_t);
    case ObstructionFamily::one_acyclic:
      return bound_1acyclic(delta, report.overall_t);
    case ObstructionFamily::two_acyclic:
      return bound_2acyclic(delta, report.overall_t);
    default:
      return std::nullopt;
  }
}

}  // namespace acyclic
