#include "acyclic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acyclic {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(n_);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m_ += static_cast<long long>(nb.size());
    max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
  }
  m_ /= 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

double Graph::average_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * static_cast<double>(m_) / n_;
}

int Graph::codegree(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("codegree: vertices must be distinct");
  int count = 0;
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

int Graph::girth() const {
  int best = kInfiniteGirth;
  std::vector<int> dist(n_), parent(n_);
  for (int s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      // A cycle through deeper vertices cannot beat the current best.
      if (best != kInfiniteGirth && 2 * dist[x] >= best) break;
      for (int y : adj_[x]) {
        if (y == parent[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else {
          // Non-tree edge: closes a cycle of this length or shorter.
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> Graph::bfs_layers(int v0) const {
  check_vertex(v0);
  std::vector<std::vector<int>> layers;
  std::vector<int> dist(n_, -1);
  dist[v0] = 0;
  std::vector<int> frontier{v0};
  while (!frontier.empty()) {
    layers.push_back(frontier);
    std::vector<int> next;
    for (int x : frontier)
      for (int y : adj_[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          next.push_back(y);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return layers;
}

std::pair<std::vector<int>, int> Graph::degeneracy_order() const {
  std::vector<int> deg(n_);
  std::vector<std::set<int>> buckets(n_ == 0 ? 1 : n_);
  for (int v = 0; v < n_; ++v) {
    deg[v] = static_cast<int>(adj_[v].size());
    buckets[deg[v]].insert(v);
  }
  std::vector<bool> peeled(n_, false);
  std::vector<int> order;
  order.reserve(n_);
  int t = 0;
  int low = 0;
  for (int step = 0; step < n_; ++step) {
    while (low < static_cast<int>(buckets.size()) && buckets[low].empty()) ++low;
    int v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    peeled[v] = true;
    t = std::max(t, deg[v]);
    order.push_back(v);
    for (int u : adj_[v]) {
      if (peeled[u]) continue;
      buckets[deg[u]].erase(u);
      --deg[u];
      buckets[deg[u]].insert(u);
      // A drop below the cursor must pull it back, degrees fall by one at
      // a time.
      if (deg[u] < low) low = deg[u];
    }
  }
  return {order, t};
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const int> vertices, std::vector<int>* old_ids) const {
  std::vector<int> label(n_, -1);
  int k = 0;
  for (int v : vertices) {
    check_vertex(v);
    if (label[v] >= 0) throw std::invalid_argument("induced: repeated vertex");
    label[v] = k++;
  }
  std::vector<std::pair<int, int>> sub_edges;
  for (int v : vertices)
    for (int u : adj_[v])
      if (label[u] >= 0 && label[v] < label[u]) sub_edges.emplace_back(label[v], label[u]);
  if (old_ids) old_ids->assign(vertices.begin(), vertices.end());
  return Graph(k, sub_edges);
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj_[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool Graph::is_forest() const {
  return m_ == n_ - static_cast<long long>(components().size());
}

Orientation::Orientation(const Graph& g, std::span<const int> order) : n_(g.num_vertices()) {
  if (static_cast<int>(order.size()) != n_)
    throw std::invalid_argument("orientation: order has wrong length");
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < n_; ++i) {
    int v = order[i];
    if (v < 0 || v >= n_ || pos[v] >= 0)
      throw std::invalid_argument("orientation: order is not a permutation");
    pos[v] = i;
  }
  out_.resize(n_);
  in_.resize(n_);
  for (auto [u, v] : g.edges()) {
    if (pos[u] < pos[v]) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    } else {
      out_[v].push_back(u);
      in_[u].push_back(v);
    }
  }
  for (auto& nb : out_) std::sort(nb.begin(), nb.end());
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

std::span<const int> Orientation::out_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("orientation: vertex out of range");
  return out_[v];
}

std::span<const int> Orientation::in_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("orientation: vertex out of range");
  return in_[v];
}

int Orientation::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

int Orientation::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

int Orientation::max_out_degree() const {
  int best = 0;
  for (const auto& nb : out_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Orientation::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("orientation: vertex out of range");
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Orientation orient_by_order(const Graph& g, std::span<const int> order) {
  return Orientation(g, order);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "edge list, line " << line_no << ": " << what;
  throw std::runtime_error(msg.str());
}

}  // namespace

LoadResult load_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool saw_content = false;
  long long declared_n = -1;
  std::vector<std::pair<int, int>> raw;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;  // blank or comment-only
    if (first.rfind("n=", 0) == 0) {
      if (saw_content) parse_fail(line_no, "n= header must come first");
      saw_content = true;
      const char* begin = first.data() + 2;
      const char* end = first.data() + first.size();
      auto [ptr, ec] = std::from_chars(begin, end, declared_n);
      if (ec != std::errc() || ptr != end || declared_n < 0)
        parse_fail(line_no, "bad vertex count in n= header");
      std::string extra;
      if (ss >> extra) parse_fail(line_no, "trailing tokens after n= header");
      continue;
    }
    saw_content = true;
    int u, v;
    {
      const char* begin = first.data();
      const char* end = first.data() + first.size();
      auto [ptr, ec] = std::from_chars(begin, end, u);
      if (ec != std::errc() || ptr != end) parse_fail(line_no, "expected \"u v\"");
    }
    if (!(ss >> v)) parse_fail(line_no, "expected \"u v\"");
    std::string extra;
    if (ss >> extra) parse_fail(line_no, "trailing tokens after edge");
    if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
    if (u == v) parse_fail(line_no, "self-loop");
    raw.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  long long n = max_id + 1;
  if (declared_n >= 0) {
    if (declared_n < n) throw std::runtime_error("edge list: n= header smaller than max vertex id + 1");
    n = declared_n;
  }
  if (n > std::numeric_limits<int>::max()) throw std::runtime_error("edge list: vertex count too large");
  std::set<std::pair<int, int>> distinct;
  for (auto [u, v] : raw) distinct.insert({std::min(u, v), std::max(u, v)});
  LoadResult result;
  result.duplicates = static_cast<int>(raw.size() - distinct.size());
  result.graph = Graph(static_cast<int>(n),
                       std::vector<std::pair<int, int>>(distinct.begin(), distinct.end()));
  return result;
}

LoadResult load_graph_text(std::string_view text) {
  std::istringstream ss{std::string(text)};
  return load_graph(ss);
}

LoadResult load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "n=" << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream ss;
  write_graph(g, ss);
  return ss.str();
}

}  // namespace acyclic
