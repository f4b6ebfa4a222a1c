#include "acyclic/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace acyclic {

namespace {

constexpr int kMaxExactVertices = 20;

// True when some cycle through v alternates between v's colour and one
// other, using assigned vertices only. Assumes no assigned neighbour
// repeats v's colour.
bool bicoloured_cycle_through(const Graph& g, const Colouring& phi, int v) {
  const int n = g.num_vertices();
  const int a = phi.colour(v);
  std::vector<char> seen(n);
  std::queue<int> frontier;
  for (int w : g.neighbors(v)) {
    if (!phi.is_assigned(w)) continue;
    const int b = phi.colour(w);
    std::fill(seen.begin(), seen.end(), 0);
    seen[w] = 1;
    frontier.push(w);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      const int want = phi.colour(x) == a ? b : a;
      for (int y : g.neighbors(x)) {
        if (seen[y]) continue;
        if (x == w && y == v) continue;  // the closing edge itself
        if (!phi.is_assigned(y) || phi.colour(y) != want) continue;
        if (y == v) return true;
        seen[y] = 1;
        frontier.push(y);
      }
    }
  }
  return false;
}

struct ChromaticSearch {
  const Graph& g;
  std::vector<int> order;  // densest first: reversed peeling order
  bool acyclic;
  Colouring phi;
  long long nodes = 0;

  bool solve(std::size_t idx, int max_used, int k) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const int top = std::min({static_cast<int>(idx), max_used + 1, k - 1});
    for (int c = 0; c <= top; ++c) {
      bool proper = true;
      for (int u : g.neighbors(v))
        if (phi.is_assigned(u) && phi.colour(u) == c) {
          proper = false;
          break;
        }
      if (!proper) continue;
      ++nodes;
      phi.assign(v, c);
      if (!acyclic || !bicoloured_cycle_through(g, phi, v)) {
        if (solve(idx + 1, std::max(max_used, c), k)) return true;
      }
      phi.clear(v);
    }
    return false;
  }
};

ExactResult chromatic_number(const Graph& g, int k_max, bool acyclic, const char* name) {
  if (g.num_vertices() > kMaxExactVertices)
    throw std::invalid_argument(std::string(name) + ": more than " +
                                std::to_string(kMaxExactVertices) + " vertices");
  const auto start = std::chrono::steady_clock::now();
  ExactResult res;
  if (g.num_vertices() == 0) {
    res.value = 0;
    return res;
  }
  ChromaticSearch search{g, g.degeneracy_order().first, acyclic,
                         Colouring(g.num_vertices(), k_max)};
  std::reverse(search.order.begin(), search.order.end());
  for (int k = 1; k <= k_max; ++k) {
    if (search.solve(0, -1, k)) {
      res.value = k;
      break;
    }
  }
  res.nodes_expanded = search.nodes;
  res.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return res;
}

}  // namespace

ExactResult chi_a_exact(const Graph& g, int k_max) {
  return chromatic_number(g, k_max, true, "chi_a_exact");
}

ExactResult chi_exact(const Graph& g, int k_max) {
  return chromatic_number(g, k_max, false, "chi_exact");
}

CountResult count_acyclic_colourings(const Graph& g, const ConstraintSet& cs,
                                     const CycleFamily& fam, int k) {
  const int n = g.num_vertices();
  if (k < 1) throw std::invalid_argument("count_acyclic_colourings: k must be positive");
  if (cs.num_vertices() != n || fam.num_vertices() > n)
    throw std::invalid_argument("count_acyclic_colourings: size mismatch");
  if (std::pow(static_cast<double>(k), n) > 1e8)
    throw std::invalid_argument("count_acyclic_colourings: k^n exceeds the enumeration budget");

  const auto start = std::chrono::steady_clock::now();
  CountResult res;

  // Member cycles indexed by their largest vertex: a fresh assignment at v
  // can only complete those.
  std::vector<std::vector<std::size_t>> closing_at(n);
  for (std::size_t id = 0; id < fam.size(); ++id) {
    const auto& cyc = fam.cycle(id);
    closing_at[*std::max_element(cyc.begin(), cyc.end())].push_back(id);
  }

  Colouring phi(n, k);
  auto count_from = [&](auto&& self, int v) -> long long {
    if (v == n) return 1;
    long long total = 0;
    for (int c = 0; c < k; ++c) {
      bool admissible = true;
      for (int u : cs.neighbors(v))
        if (u < v && phi.colour(u) == c) {
          admissible = false;
          break;
        }
      if (!admissible) continue;
      ++res.nodes_expanded;
      phi.assign(v, c);
      for (std::size_t id : closing_at[v])
        if (is_bicoloured(fam.cycle(id), phi)) {
          admissible = false;
          break;
        }
      if (admissible) total += self(self, v + 1);
      phi.clear(v);
    }
    return total;
  };
  res.value = count_from(count_from, 0);
  res.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return res;
}

}  // namespace acyclic
