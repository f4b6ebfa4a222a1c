#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/random.hpp"

namespace testsupport {

struct CorpusEntry {
  std::string name;
  acyclic::Graph graph;
};

// Small named graphs shared by every suite.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> list;
    for (const char* name : {"path 4", "path 5", "cycle 4", "cycle 5", "cycle 6",
                             "cycle 7", "complete 4", "complete 5",
                             "complete_bipartite 2 3", "complete_bipartite 3 3",
                             "star 5", "hypercube 3", "petersen", "heawood"})
      list.push_back({name, acyclic::gen_named(name)});
    list.push_back({"kn1 4", acyclic::gen_subdivision_complete(4)});
    return list;
  }();
  return entries;
}

inline std::vector<CorpusEntry> cyclic_corpus() {
  std::vector<CorpusEntry> list;
  for (const auto& entry : corpus())
    if (entry.graph.girth() != acyclic::Graph::kInfiniteGirth) list.push_back(entry);
  return list;
}

// Random 2-tree: triangle seed, then each new vertex joins both ends of a
// uniformly chosen existing edge.
inline acyclic::Graph random_two_tree(int n, std::uint64_t seed) {
  acyclic::Rng rng(seed);
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    const auto [a, b] = edges[acyclic::uniform_index(rng, edges.size())];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
  }
  return acyclic::Graph(n, edges);
}

}  // namespace testsupport
