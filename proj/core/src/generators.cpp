#include "acyclic/generators.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "acyclic/random.hpp"

namespace acyclic {

Graph gen_one_subdivision(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::pair<int, int>> edges;
  int next = n;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, next);
    edges.emplace_back(next, v);
    ++next;
  }
  return Graph(next, edges);
}

Graph gen_subdivision_complete(int nv) {
  if (nv < 1) throw std::invalid_argument("gen_subdivision_complete: nv must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) edges.emplace_back(u, v);
  return gen_one_subdivision(Graph(nv, edges));
}

Graph gen_bipartite_random(int nside, double p, std::uint64_t seed) {
  if (nside < 1) throw std::invalid_argument("gen_bipartite_random: nside must be positive");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gen_bipartite_random: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nside; ++u)
    for (int v = 0; v < nside; ++v)
      if (uniform_real(rng) < p) edges.emplace_back(u, nside + v);
  return Graph(2 * nside, edges);
}

std::optional<Graph> gen_random_regular_girth(int nv, int d, int girth,
                                              std::uint64_t seed, int max_tries) {
  if (nv < 1 || d < 1) throw std::invalid_argument("gen_random_regular_girth: bad size");
  if ((static_cast<long long>(nv) * d) % 2 != 0)
    throw std::invalid_argument("gen_random_regular_girth: nv * d must be even");
  if (girth < 3) throw std::invalid_argument("gen_random_regular_girth: girth must be >= 3");
  if (d >= nv) return std::nullopt;

  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(nv) * d);
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    // Uniform pairing of half-edges (Fisher-Yates), then rejection keeps
    // the conditional distribution uniform over accepted graphs.
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[uniform_index(rng, i)]);
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        simple = false;
        break;
      }
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end(),
              [](auto a, auto b) {
                auto ka = std::minmax(a.first, a.second);
                auto kb = std::minmax(b.first, b.second);
                return ka < kb;
              });
    bool parallel = false;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      auto ka = std::minmax(edges[i].first, edges[i].second);
      auto kb = std::minmax(edges[i + 1].first, edges[i + 1].second);
      if (ka == kb) {
        parallel = true;
        break;
      }
    }
    if (parallel) continue;
    Graph g(nv, edges);
    if (g.girth() >= girth) return g;
  }
  return std::nullopt;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

}  // namespace

Graph gen_projective_incidence(int q) {
  if (!is_prime(q)) throw std::invalid_argument("gen_projective_incidence: q must be prime");
  // Canonical representatives of projective points: leading coordinate 1.
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({1, a, b});
  for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
  points.push_back({0, 0, 1});
  const int count = static_cast<int>(points.size());  // q^2 + q + 1

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const auto& p = points[i];
      const auto& l = points[j];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0)
        edges.emplace_back(i, count + j);
    }
  return Graph(2 * count, edges);
}

namespace {

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_named: path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_named: cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("gen_named: complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("gen_named: complete_bipartite needs a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph make_hypercube(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("gen_named: hypercube needs 0 <= k <= 20");
  const int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < k; ++bit)
      if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
  return Graph(n, edges);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  return Graph(10, edges);
}

Graph make_heawood() {
  // 14-cycle plus chords i -> i+5 from even vertices.
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 14; ++v) edges.emplace_back(v, (v + 1) % 14);
  for (int v = 0; v < 14; v += 2) edges.emplace_back(v, (v + 5) % 14);
  return Graph(14, edges);
}

}  // namespace

Graph gen_named(std::string_view name) {
  std::istringstream ss{std::string(name)};
  std::string kind;
  ss >> kind;
  auto next_int = [&](const char* what) {
    int value;
    if (!(ss >> value)) {
      std::ostringstream msg;
      msg << "gen_named: " << kind << " needs " << what;
      throw std::invalid_argument(msg.str());
    }
    return value;
  };
  if (kind == "path") return make_path(next_int("a length"));
  if (kind == "cycle") return make_cycle(next_int("a length"));
  if (kind == "complete") return make_complete(next_int("a vertex count"));
  if (kind == "complete_bipartite") {
    int a = next_int("two part sizes");
    int b = next_int("two part sizes");
    return make_complete_bipartite(a, b);
  }
  if (kind == "star") return make_complete_bipartite(1, next_int("a leaf count"));
  if (kind == "hypercube") return make_hypercube(next_int("a dimension"));
  if (kind == "petersen") return make_petersen();
  if (kind == "heawood") return make_heawood();
  throw std::invalid_argument("gen_named: unknown preset \"" + std::string(name) + "\"");
}

}  // namespace acyclic
