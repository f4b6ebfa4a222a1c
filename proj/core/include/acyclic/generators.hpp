#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "acyclic/graph.hpp"

namespace acyclic {

// One new vertex per edge: edge (u, v) becomes a path u - m_uv - v.
// Midpoints are numbered after the original vertices, in edge order.
Graph gen_one_subdivision(const Graph& g);

// Subdivision of the complete graph on nv vertices.
Graph gen_subdivision_complete(int nv);

// Bipartite random graph with parts {0..nside-1} and {nside..2*nside-1};
// each cross pair is an edge independently with probability p.
Graph gen_bipartite_random(int nside, double p, std::uint64_t seed);

// Random d-regular graph of girth at least `girth`, by pairing half-edges
// and rejecting non-simple or short-cycled outcomes. Returns nullopt when
// max_tries pairings all fail. Requires nv * d even.
std::optional<Graph> gen_random_regular_girth(int nv, int d, int girth,
                                              std::uint64_t seed, int max_tries = 100000);

// Point-line incidence graph of the projective plane of prime order q:
// (q^2+q+1) points then (q^2+q+1) lines, edges where the dot product over
// GF(q) vanishes. (q+1)-regular, girth 6.
Graph gen_projective_incidence(int q);

// Named presets: "path n", "cycle n", "complete n", "complete_bipartite a b",
// "star n", "hypercube k", "petersen", "heawood".
Graph gen_named(std::string_view name);

}  // namespace acyclic
