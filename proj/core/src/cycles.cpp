#include "acyclic/cycles.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acyclic {

std::vector<int> canonical_cycle(std::span<const int> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) throw std::invalid_argument("canonical_cycle: fewer than three vertices");
  std::size_t at = 0;
  for (std::size_t i = 1; i < len; ++i)
    if (cycle[i] < cycle[at]) at = i;
  auto pick = [&](std::size_t offset) { return cycle[(at + offset) % len]; };
  std::vector<int> out;
  out.reserve(len);
  const bool forward = pick(1) < pick(len - 1);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(forward ? pick(i) : pick(len - i));
  return out;
}

CycleFamily::CycleFamily(const Graph& g, std::vector<std::vector<int>> cycles)
    : n_(g.num_vertices()) {
  std::set<std::vector<int>> seen;
  for (auto& raw : cycles) {
    if (raw.size() < 4 || raw.size() % 2 != 0)
      throw std::invalid_argument("cycle family: cycles must have even length >= 4");
    std::set<int> distinct(raw.begin(), raw.end());
    if (distinct.size() != raw.size())
      throw std::invalid_argument("cycle family: cycle repeats a vertex");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      int u = raw[i];
      int v = raw[(i + 1) % raw.size()];
      if (!g.has_edge(u, v))
        throw std::invalid_argument("cycle family: consecutive vertices not adjacent in host");
    }
    auto canon = canonical_cycle(raw);
    if (seen.insert(canon).second) cycles_.push_back(std::move(canon));
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  index();
}

void CycleFamily::index() {
  by_vertex_.assign(n_, {});
  for (std::size_t id = 0; id < cycles_.size(); ++id) {
    by_length_[static_cast<int>(cycles_[id].size())].push_back(id);
    for (int v : cycles_[id]) by_vertex_[v].push_back(id);
  }
}

std::span<const std::size_t> CycleFamily::ids_of_length(int len) const {
  auto it = by_length_.find(len);
  if (it == by_length_.end()) return {};
  return it->second;
}

std::span<const std::size_t> CycleFamily::ids_through(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("cycle family: vertex out of range");
  return by_vertex_[v];
}

std::vector<int> CycleFamily::lengths() const {
  std::vector<int> out;
  for (const auto& [len, ids] : by_length_) out.push_back(len);
  return out;
}

namespace {

struct CycleSearch {
  const Graph& g;
  int max_len;
  long long budget;
  long long partial_paths = 0;
  std::vector<int> path;
  std::vector<bool> on_path;
  std::vector<std::vector<int>>* out;

  // Paths grow from the start vertex s through vertices > s only, and a
  // cycle is recorded when it closes back at s with the direction tie
  // broken by path[1] < last vertex. Each even cycle is produced exactly
  // once, already in canonical form.
  void extend() {
    if (++partial_paths > budget)
      throw std::runtime_error("cycle enumeration: partial-path budget exceeded");
    const int s = path[0];
    const int v = path.back();
    const int len = static_cast<int>(path.size());
    for (int u : g.neighbors(v)) {
      if (u == s && len >= 4 && len % 2 == 0 && path[1] < v) out->push_back(path);
      if (u <= s || on_path[u] || len == max_len) continue;
      path.push_back(u);
      on_path[u] = true;
      extend();
      on_path[u] = false;
      path.pop_back();
    }
  }
};

}  // namespace

CycleFamily enumerate_even_cycles(const Graph& g, int max_len, long long budget) {
  if (max_len < 4) return CycleFamily(g, {});
  std::vector<std::vector<int>> found;
  CycleSearch search{g, max_len, budget, 0, {}, std::vector<bool>(g.num_vertices(), false),
                     &found};
  for (int s = 0; s < g.num_vertices(); ++s) {
    search.path = {s};
    search.on_path.assign(g.num_vertices(), false);
    search.on_path[s] = true;
    search.extend();
  }
  return CycleFamily(g, std::move(found));
}

CycleFamily filter_kept(const CycleFamily& fam, const std::vector<bool>& keep) {
  CycleFamily out;
  out.n_ = fam.n_;
  for (std::size_t id = 0; id < fam.cycles_.size(); ++id)
    if (keep[id]) out.cycles_.push_back(fam.cycles_[id]);
  out.index();
  return out;
}

CycleFamily filter_gamma_free(const CycleFamily& fam, const ConstraintSet& cs) {
  if (cs.num_vertices() != fam.num_vertices())
    throw std::invalid_argument("filter_gamma_free: vertex counts differ");
  std::vector<bool> keep(fam.size(), true);
  for (std::size_t id = 0; id < fam.size(); ++id) {
    const auto& c = fam.cycle(id);
    const std::size_t len = c.size();
    for (std::size_t i = 0; i < len; ++i)
      if (cs.contains(c[i], c[(i + 2) % len])) {
        keep[id] = false;
        break;
      }
  }
  return filter_kept(fam, keep);
}

CycleFamily filter_antidirected(const CycleFamily& fam, const Orientation& o) {
  if (o.num_vertices() != fam.num_vertices())
    throw std::invalid_argument("filter_antidirected: vertex counts differ");
  std::vector<bool> keep(fam.size(), true);
  for (std::size_t id = 0; id < fam.size(); ++id) {
    const auto& c = fam.cycle(id);
    const std::size_t len = c.size();
    for (std::size_t i = 0; i < len; ++i) {
      // A directed sub-path c[i] -> c[i+1] -> c[i+2] breaks alternation.
      if (o.has_arc(c[i], c[(i + 1) % len]) && o.has_arc(c[(i + 1) % len], c[(i + 2) % len])) {
        keep[id] = false;
        break;
      }
      if (o.has_arc(c[(i + 2) % len], c[(i + 1) % len]) && o.has_arc(c[(i + 1) % len], c[i])) {
        keep[id] = false;
        break;
      }
    }
  }
  return filter_kept(fam, keep);
}

std::map<int, int> cycle_degree_profile(const CycleFamily& fam) {
  std::map<int, int> profile;
  for (int len : fam.lengths()) {
    std::vector<int> through(fam.num_vertices(), 0);
    for (std::size_t id : fam.ids_of_length(len))
      for (int v : fam.cycle(id)) ++through[v];
    int best = 0;
    for (int c : through) best = std::max(best, c);
    profile[len] = best;
  }
  return profile;
}

bool is_bicoloured(std::span<const int> cycle, const Colouring& phi) {
  const std::size_t len = cycle.size();
  if (len < 4 || len % 2 != 0)
    throw std::invalid_argument("is_bicoloured: cycle must have even length >= 4");
  for (int v : cycle)
    if (!phi.is_assigned(v))
      throw std::invalid_argument("is_bicoloured: cycle vertex is uncoloured");
  for (std::size_t i = 0; i < len; ++i)
    if (phi.colour(cycle[i]) != phi.colour(cycle[(i + 2) % len])) return false;
  return true;
}

namespace {

long long count_closed_paths(const Graph& g, int v0, int length, std::vector<int>& path,
                             std::vector<bool>& on_path) {
  const int v = path.back();
  if (static_cast<int>(path.size()) == length) {
    return g.has_edge(v, v0) ? 1 : 0;
  }
  long long total = 0;
  for (int u : g.neighbors(v)) {
    if (on_path[u]) continue;
    path.push_back(u);
    on_path[u] = true;
    total += count_closed_paths(g, v0, length, path, on_path);
    on_path[u] = false;
    path.pop_back();
  }
  return total;
}

}  // namespace

long long count_cycles_through(const Graph& g, int v0, int length) {
  if (v0 < 0 || v0 >= g.num_vertices())
    throw std::invalid_argument("count_cycles_through: vertex out of range");
  if (length < 3) throw std::invalid_argument("count_cycles_through: length must be >= 3");
  std::vector<int> path{v0};
  std::vector<bool> on_path(g.num_vertices(), false);
  on_path[v0] = true;
  // Each cycle is traversed once per direction.
  return count_closed_paths(g, v0, length, path, on_path) / 2;
}

void write_cycles(const CycleFamily& fam, std::ostream& out) {
  for (const auto& c : fam.cycles()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ",";
      out << c[i];
    }
    out << "\n";
  }
}

std::string cycles_to_text(const CycleFamily& fam) {
  std::ostringstream ss;
  write_cycles(fam, ss);
  return ss.str();
}

}  // namespace acyclic
