#include "acyclic/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace acyclic {

ConstraintSet::ConstraintSet(int n) : n_(n), inc_(n) {
  if (n < 0) throw std::invalid_argument("constraints: negative vertex count");
}

ConstraintSet::ConstraintSet(int n, const std::vector<std::pair<int, int>>& pairs)
    : ConstraintSet(n) {
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("constraints: vertex out of range");
    if (u == v) throw std::invalid_argument("constraints: pair of equal vertices");
    inc_[u].push_back(v);
    inc_[v].push_back(u);
  }
  for (auto& nb : inc_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    size_ += static_cast<long long>(nb.size());
  }
  size_ /= 2;
}

bool ConstraintSet::contains(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("constraints: vertex out of range");
  if (u == v) return false;
  return std::binary_search(inc_[u].begin(), inc_[u].end(), v);
}

std::span<const int> ConstraintSet::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("constraints: vertex out of range");
  return inc_[v];
}

int ConstraintSet::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int ConstraintSet::max_degree() const {
  int best = 0;
  for (const auto& nb : inc_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<std::pair<int, int>> ConstraintSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int u = 0; u < n_; ++u)
    for (int v : inc_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

ConstraintSet edge_constraints(const Graph& g) {
  return ConstraintSet(g.num_vertices(), g.edges());
}

ConstraintSet directed_2path_constraints(const Orientation& o) {
  const int n = o.num_vertices();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int w : o.out_neighbors(u)) {
      pairs.emplace_back(u, w);
      for (int v : o.out_neighbors(w))
        if (v != u) pairs.emplace_back(u, v);
    }
  return ConstraintSet(n, pairs);
}

ConstraintSet heavy_in_codegree_constraints(const Orientation& o, double threshold) {
  const int n = o.num_vertices();
  // Each common in-neighbour contributes one out-pair, so tally pairs of
  // out-neighbours over all vertices.
  std::map<std::pair<int, int>, long long> shared;
  for (int w = 0; w < n; ++w) {
    auto out = o.out_neighbors(w);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) ++shared[{out[i], out[j]}];
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [pair, count] : shared)
    if (static_cast<double>(count) >= threshold) pairs.push_back(pair);
  return ConstraintSet(n, pairs);
}

ConstraintSet gamma_special_pairs(const Graph& g, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma_special_pairs: gamma must lie in (0, 1)");
  if (g.max_degree() < 2)
    throw std::invalid_argument("gamma_special_pairs: max degree must be at least 2");
  const int n = g.num_vertices();
  const double threshold = std::pow(static_cast<double>(g.max_degree()), gamma);
  std::map<std::pair<int, int>, long long> shared;
  for (int w = 0; w < n; ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) ++shared[{nb[i], nb[j]}];
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [pair, count] : shared)
    if (static_cast<double>(count) >= threshold) pairs.push_back(pair);
  return ConstraintSet(n, pairs);
}

ConstraintSet constraint_union(const ConstraintSet& a, const ConstraintSet& b) {
  if (a.num_vertices() != b.num_vertices())
    throw std::invalid_argument("constraint_union: vertex counts differ");
  auto pairs = a.pairs();
  auto more = b.pairs();
  pairs.insert(pairs.end(), more.begin(), more.end());
  return ConstraintSet(a.num_vertices(), pairs);
}

Colouring greedy_proper_colouring(const ConstraintSet& cs) {
  const int n = cs.num_vertices();
  Graph h(n, cs.pairs());
  auto [order, t] = h.degeneracy_order();
  (void)t;
  std::vector<int> colour(n, Colouring::kUnset);
  int palette = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<bool> taken(h.degree(v) + 1, false);
    for (int u : h.neighbors(v))
      if (colour[u] >= 0 && colour[u] <= h.degree(v)) taken[colour[u]] = true;
    int c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
    palette = std::max(palette, c + 1);
  }
  if (n == 0) return Colouring(0, 0);
  return Colouring(std::move(colour), palette);
}

void write_constraints(const ConstraintSet& cs, std::ostream& out) {
  out << "n=" << cs.num_vertices() << "\n";
  for (auto [u, v] : cs.pairs()) out << u << " " << v << "\n";
}

std::string constraints_to_text(const ConstraintSet& cs) {
  std::ostringstream ss;
  write_constraints(cs, ss);
  return ss.str();
}

}  // namespace acyclic
