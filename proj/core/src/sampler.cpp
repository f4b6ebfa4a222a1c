#include "acyclic/sampler.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "acyclic/random.hpp"

namespace acyclic {

namespace {

void validate_pi(const PiSpec& pi) {
  if (pi.explicit_family && (pi.gamma_free_filter || pi.antidirected_filter))
    throw std::invalid_argument("PiSpec: an explicit family takes no filters");
}

// Rotate a simple cycle so it starts at v and heads toward the smaller of
// v's two cycle neighbours.
std::vector<int> rotate_cycle_at(std::span<const int> cycle, int v) {
  const std::size_t len = cycle.size();
  std::size_t at = 0;
  while (at < len && cycle[at] != v) ++at;
  if (at == len) throw std::logic_error("rotate_cycle_at: vertex not on cycle");
  auto pick = [&](std::size_t offset) { return cycle[(at + offset) % len]; };
  std::vector<int> out;
  out.reserve(len);
  const bool forward = pick(1) < pick(len - 1);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(forward ? pick(i) : pick(len - i));
  return out;
}

// Depth-first search for one member cycle of exact even length through a
// fixed start vertex, over coloured vertices whose colours alternate
// between the start's colour and the colour picked at depth one.
struct PathSearch {
  const Graph& g;
  const Colouring& phi;
  const ConstraintSet* gamma;
  const Orientation* orient;
  int target_len = 0;
  int colour_even = 0;
  int colour_odd = -1;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<char> arc_forward;  // traversal direction per placed edge
  long long* nodes = nullptr;
  long long node_cap = 0;

  bool extend() {
    if (++*nodes > node_cap)
      throw std::runtime_error("sample_colouring: cycle search budget exceeded");
    const int k = static_cast<int>(path.size());
    const int prev = path.back();
    const bool closing = k + 1 == target_len;
    for (int w : g.neighbors(prev)) {
      if (on_path[w]) continue;
      if (!phi.is_assigned(w)) continue;
      const int cw = phi.colour(w);
      if (k == 1) {
        colour_odd = cw;
      } else if (cw != (k % 2 == 0 ? colour_even : colour_odd)) {
        continue;
      }
      if (orient) {
        const bool fwd = orient->has_arc(prev, w);
        if (k >= 2 && fwd == arc_forward.back()) continue;
        if (closing) {
          const bool close_fwd = orient->has_arc(w, path[0]);
          if (close_fwd == fwd) continue;
        }
        arc_forward.push_back(fwd);
      }
      bool ok = true;
      if (gamma) {
        if (k >= 2 && gamma->contains(path[k - 2], w)) ok = false;
        if (ok && closing &&
            (gamma->contains(path[k - 1], path[0]) || gamma->contains(w, path[1])))
          ok = false;
      }
      if (ok && closing) {
        if (g.has_edge(w, path[0])) {
          path.push_back(w);
          return true;
        }
        ok = false;
      } else if (ok) {
        path.push_back(w);
        on_path[w] = 1;
        if (extend()) return true;
        on_path[w] = 0;
        path.pop_back();
      }
      if (orient) arc_forward.pop_back();
    }
    return false;
  }
};

class FlawDetector {
 public:
  FlawDetector(const Graph& g, const ConstraintSet& cs, const PiSpec& pi)
      : g_(g), pi_(pi) {
    if (pi.explicit_family) {
      strategy_ = Strategy::family;
      return;
    }
    if (pi.gamma_free_filter || pi.antidirected_filter) {
      strategy_ = Strategy::dfs;
      return;
    }
    // The pair-wise search assumes every edge is a constraint, so a flawless
    // neighbourhood never repeats the fresh vertex's colour.
    for (auto [u, v] : g.edges())
      if (!cs.contains(u, v)) {
        strategy_ = Strategy::dfs;
        return;
      }
    strategy_ = Strategy::pair_bfs;
  }

  // Shortest fully coloured bicoloured member cycle through v, rotated to
  // start at v. v itself must be coloured.
  std::optional<std::vector<int>> shortest_through(const Colouring& phi, int v) const {
    switch (strategy_) {
      case Strategy::family:
        return shortest_family(phi, v);
      case Strategy::pair_bfs:
        return shortest_pair_bfs(phi, v);
      case Strategy::dfs:
        return shortest_dfs(phi, v);
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> shortest_dfs(const Colouring& phi, int v) const {
    const int n = g_.num_vertices();
    long long nodes = 0;
    for (int len = 4; len <= n; len += 2) {
      PathSearch search{
          g_,
          phi,
          pi_.gamma_free_filter ? &*pi_.gamma_free_filter : nullptr,
          pi_.antidirected_filter ? &*pi_.antidirected_filter : nullptr,
          len,
          phi.colour(v)};
      search.path = {v};
      search.on_path.assign(n, 0);
      search.on_path[v] = 1;
      search.nodes = &nodes;
      search.node_cap = kNodeCap;
      if (search.extend()) return rotate_cycle_at(search.path, v);
    }
    return std::nullopt;
  }

 private:
  enum class Strategy { family, pair_bfs, dfs };

  std::optional<std::vector<int>> shortest_family(const Colouring& phi, int v) const {
    // Members are sorted by length first, so the first hit is shortest.
    for (std::size_t id : pi_.explicit_family->ids_through(v)) {
      const auto& cyc = pi_.explicit_family->cycle(id);
      const bool total = std::all_of(cyc.begin(), cyc.end(),
                                     [&](int u) { return phi.is_assigned(u); });
      if (total && is_bicoloured(cyc, phi)) return rotate_cycle_at(cyc, v);
    }
    return std::nullopt;
  }

  // For each coloured neighbour w, the shortest alternating path from w
  // back to v avoiding the edge vw closes the shortest member cycle whose
  // second class carries w's colour.
  std::optional<std::vector<int>> shortest_pair_bfs(const Colouring& phi, int v) const {
    const int n = g_.num_vertices();
    const int a = phi.colour(v);
    std::optional<std::vector<int>> best;
    std::vector<int> parent(n);
    std::vector<char> seen(n);
    for (int w : g_.neighbors(v)) {
      if (!phi.is_assigned(w)) continue;
      const int b = phi.colour(w);
      if (b == a) continue;  // the conflict check rules this out first
      std::fill(seen.begin(), seen.end(), 0);
      seen[w] = 1;
      parent[w] = -1;
      std::queue<int> frontier;
      frontier.push(w);
      while (!frontier.empty() && !seen[v]) {
        const int x = frontier.front();
        frontier.pop();
        const int cx = phi.colour(x);
        const int want = cx == a ? b : a;
        for (int y : g_.neighbors(x)) {
          if (seen[y]) continue;
          if (x == w && y == v) continue;  // the closing edge itself
          if (!phi.is_assigned(y) || phi.colour(y) != want) continue;
          seen[y] = 1;
          parent[y] = x;
          if (y == v) break;
          frontier.push(y);
        }
      }
      if (!seen[v]) continue;
      std::vector<int> cycle{v};
      for (int x = parent[v]; x != -1; x = parent[x]) cycle.push_back(x);
      std::reverse(cycle.begin() + 1, cycle.end());  // v, w, ..., last before v
      if (!best || cycle.size() < best->size()) best = std::move(cycle);
    }
    if (best) return rotate_cycle_at(*best, *best->begin());
    return std::nullopt;
  }

  static constexpr long long kNodeCap = 10'000'000;

  const Graph& g_;
  const PiSpec& pi_;
  Strategy strategy_ = Strategy::dfs;
};

// One bicoloured cycle of the all-even-cycles family, found per unordered
// colour pair by trimming degree-one vertices out of the alternating
// subgraph and walking what remains.
std::optional<std::vector<int>> peeling_witness(const Graph& g, const Colouring& phi) {
  const int n = g.num_vertices();
  const auto classes = phi.colour_classes();
  std::vector<int> deg(n);
  std::vector<char> alive(n);
  for (std::size_t a = 0; a < classes.size(); ++a) {
    if (classes[a].empty()) continue;
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (classes[b].empty()) continue;
      std::fill(alive.begin(), alive.end(), 0);
      for (int v : classes[a]) alive[v] = 1;
      for (int v : classes[b]) alive[v] = 1;
      auto alternating = [&](int x, int y) {
        return alive[x] && alive[y] && phi.colour(x) != phi.colour(y);
      };
      std::queue<int> low;
      auto degree_of = [&](int v) {
        int d = 0;
        for (int w : g.neighbors(v))
          if (alternating(v, w)) ++d;
        return d;
      };
      for (int v : classes[a])
        if ((deg[v] = degree_of(v)) <= 1) low.push(v);
      for (int v : classes[b])
        if ((deg[v] = degree_of(v)) <= 1) low.push(v);
      int survivors = static_cast<int>(classes[a].size() + classes[b].size());
      while (!low.empty()) {
        const int v = low.front();
        low.pop();
        if (!alive[v]) continue;
        alive[v] = 0;
        --survivors;
        for (int w : g.neighbors(v))
          if (alive[w] && phi.colour(w) != phi.colour(v) && --deg[w] == 1) low.push(w);
      }
      if (survivors == 0) continue;
      // Min degree two within the remainder, so a walk that never backtracks
      // must close a cycle; edges alternate colours, so its length is even.
      int start = -1;
      for (int v = 0; v < n && start < 0; ++v)
        if (alive[v]) start = v;
      std::vector<int> order;
      std::vector<int> pos(n, -1);
      int prev = -1, cur = start;
      while (pos[cur] == -1) {
        pos[cur] = static_cast<int>(order.size());
        order.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
          if (w != prev && alternating(cur, w)) {
            next = w;
            break;
          }
        prev = cur;
        cur = next;
      }
      return std::vector<int>(order.begin() + pos[cur], order.end());
    }
  }
  return std::nullopt;
}

}  // namespace

SampleResult sample_colouring(const Graph& g, const ConstraintSet& cs,
                              const PiSpec& pi, int k, std::uint64_t seed,
                              long long max_steps) {
  validate_pi(pi);
  if (cs.num_vertices() != g.num_vertices())
    throw std::invalid_argument("sample_colouring: constraint set size mismatch");
  if (k < cs.max_degree() + 2)
    throw std::invalid_argument(
        "sample_colouring: palette must exceed the constraint degree by at least 2");
  const int n = g.num_vertices();
  if (max_steps < 0) max_steps = 1000LL * std::max(n, 1) * k;

  SampleResult res;
  res.colouring = Colouring(n, k);
  Colouring& phi = res.colouring;
  FlawDetector detector(g, cs, pi);
  Rng rng(seed);
  std::set<int> uncoloured;
  for (int v = 0; v < n; ++v) uncoloured.insert(v);

  while (!uncoloured.empty()) {
    if (res.steps >= max_steps) return res;
    ++res.steps;
    const int v = *uncoloured.begin();
    const int c = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(k)));
    phi.assign(v, c);

    bool conflict = false;
    for (int u : cs.neighbors(v))
      if (phi.is_assigned(u) && phi.colour(u) == c) {
        conflict = true;
        break;
      }
    if (conflict) {
      phi.clear(v);
      res.last_flaw = "constraint conflict at vertex " + std::to_string(v);
      continue;
    }

    if (auto cycle = detector.shortest_through(phi, v)) {
      // Resample the cycle except its last two vertices; the fresh vertex
      // comes first, so it is always among the uncoloured.
      for (std::size_t i = 0; i + 2 < cycle->size(); ++i) {
        phi.clear((*cycle)[i]);
        uncoloured.insert((*cycle)[i]);
      }
      res.last_flaw = "bicoloured cycle of length " + std::to_string(cycle->size()) +
                      " through vertex " + std::to_string(v);
      continue;
    }

    uncoloured.erase(v);
  }
  res.success = true;
  return res;
}

Verdict verify_colouring(const Graph& g, const ConstraintSet& cs,
                         const Colouring& phi, const PiSpec& pi) {
  validate_pi(pi);
  if (phi.num_vertices() != g.num_vertices())
    throw std::invalid_argument("verify_colouring: colouring size mismatch");
  if (!phi.is_total())
    throw std::invalid_argument("verify_colouring: colouring must be total");

  Verdict verdict;
  for (auto [u, v] : cs.pairs())
    if (phi.colour(u) == phi.colour(v)) verdict.constraint_violations.emplace_back(u, v);

  if (pi.explicit_family) {
    for (const auto& cyc : pi.explicit_family->cycles())
      if (is_bicoloured(cyc, phi)) {
        verdict.bicoloured_witness = cyc;
        break;
      }
  } else {
    bool monochrome_edge = false;
    for (auto [u, v] : g.edges())
      if (phi.colour(u) == phi.colour(v)) {
        monochrome_edge = true;
        break;
      }
    if (!pi.gamma_free_filter && !pi.antidirected_filter && !monochrome_edge) {
      verdict.bicoloured_witness = peeling_witness(g, phi);
    } else {
      // Monochromatic even cycles and filter exemptions need the general
      // per-vertex search.
      FlawDetector detector(g, cs, pi);
      for (int v = 0; v < g.num_vertices(); ++v)
        if (auto cyc = detector.shortest_dfs(phi, v)) {
          verdict.bicoloured_witness = std::move(*cyc);
          break;
        }
    }
  }

  verdict.ok = verdict.constraint_violations.empty() && !verdict.bicoloured_witness;
  return verdict;
}

Colouring product_colouring(const Colouring& a, const Colouring& b) {
  if (a.num_vertices() != b.num_vertices())
    throw std::invalid_argument("product_colouring: size mismatch");
  if (!a.is_total() || !b.is_total())
    throw std::invalid_argument("product_colouring: both colourings must be total");
  const int n = a.num_vertices();
  const int kb = b.palette_size();
  std::vector<int> values(n);
  for (int v = 0; v < n; ++v) values[v] = a.colour(v) * kb + b.colour(v);
  return Colouring(std::move(values), a.palette_size() * kb);
}

PipelineResult colour_degenerate_pipeline(const Graph& g, std::uint64_t seed,
                                          long long max_steps) {
  PipelineResult res;
  const int n = g.num_vertices();
  if (n == 0) {
    res.colouring = Colouring(0, 1);
    res.sample.success = true;
    return res;
  }

  auto [order, t] = g.degeneracy_order();
  t = std::max(t, 1);
  const int delta = g.max_degree();
  const Orientation orient = orient_by_order(g, order);

  const ConstraintSet gamma0 = directed_2path_constraints(orient);
  res.phi0 = greedy_proper_colouring(gamma0);

  ConstraintSet gamma1 =
      heavy_in_codegree_constraints(orient, std::cbrt(double(t) * delta));
  if (double(t) * delta > 1.0) {
    res.bound = bound_degenerate(delta, t);
  } else {
    res.bound.family = BoundFamily::degenerate;
    res.bound.delta = delta;
    res.bound.t = t;
    res.bound.pre_ceiling = 2;
    res.bound.k = 2;
    res.bound.total = 2LL * (t * t + t + 1);
  }

  PiSpec pi;
  pi.gamma_free_filter = gamma1;
  pi.antidirected_filter = orient;
  res.sample =
      sample_colouring(g, gamma1, pi, static_cast<int>(res.bound.k), seed, max_steps);
  res.phi1 = res.sample.colouring;
  if (!res.sample.success) return res;

  res.colouring = product_colouring(*res.phi0, *res.phi1);
  const Verdict verdict =
      verify_colouring(g, edge_constraints(g), res.colouring, PiSpec::all_even_cycles());
  if (!verdict.ok)
    throw std::logic_error("colour_degenerate_pipeline: product colouring failed its audit");
  return res;
}

PipelineResult colour_c2t_pipeline(const Graph& g, int t, std::uint64_t seed,
                                   std::optional<int> palette, long long max_steps) {
  if (t < 2) throw std::invalid_argument("colour_c2t_pipeline: t must be at least 2");
  PipelineResult res;
  const int n = g.num_vertices();
  if (n == 0) {
    res.colouring = Colouring(0, 1);
    res.sample.success = true;
    return res;
  }

  const int delta = g.max_degree();
  ConstraintSet special(n);
  if (delta >= 2) special = gamma_special_pairs(g, 1.0 / 3.0);
  const ConstraintSet cs = constraint_union(edge_constraints(g), special);

  const bool certified =
      t >= 3 && static_cast<long long>(delta) >= static_cast<long long>(t) * t * t;
  long long k;
  if (certified) {
    res.bound = bound_c2t(delta, t);
    k = palette ? std::max<long long>(*palette, res.bound.k) : res.bound.k;
  } else {
    if (!palette)
      throw std::invalid_argument(
          "colour_c2t_pipeline: no certified palette for delta < t^3 or t < 3; "
          "pass one explicitly");
    k = *palette;
    res.bound.family = BoundFamily::c2t;
    res.bound.delta = delta;
    res.bound.t = t;
    res.bound.gamma = 1.0 / 3.0;
    res.bound.pre_ceiling = static_cast<double>(k);
    res.bound.k = k;
    res.bound.total = k;
    res.bound.certified = false;
  }
  if (k < cs.max_degree() + 2)
    throw std::invalid_argument(
        "colour_c2t_pipeline: palette must exceed the constraint degree by at least 2");

  const PiSpec pi = PiSpec::all_even_cycles();
  res.sample = sample_colouring(g, cs, pi, static_cast<int>(k), seed, max_steps);
  res.phi1 = res.sample.colouring;
  if (!res.sample.success) return res;

  res.colouring = res.sample.colouring;
  const Verdict verdict = verify_colouring(g, cs, res.colouring, pi);
  if (!verdict.ok)
    throw std::logic_error("colour_c2t_pipeline: sampled colouring failed its audit");
  return res;
}

}  // namespace acyclic
