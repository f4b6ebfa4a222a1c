#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "support/oracles.hpp"

using namespace acyclic;

TEST_CASE("one-per-edge subdivision") {
  CHECK(testsupport::isomorphic(gen_one_subdivision(gen_named("complete 3")),
                                gen_named("cycle 6")));

  const Graph p3 = gen_one_subdivision(Graph(2, {{0, 1}}));
  CHECK(p3.num_vertices() == 3);
  CHECK(p3.has_edge(0, 2));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 1));

  // Midpoints follow the original vertices in edge order.
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph sub = gen_one_subdivision(path);
  CHECK(sub.num_vertices() == 5);
  CHECK(sub.num_edges() == 4);
  CHECK(sub.has_edge(0, 3));
  CHECK(sub.has_edge(3, 1));
  CHECK(sub.has_edge(1, 4));
  CHECK(sub.has_edge(4, 2));

  const Graph star = gen_named("star 4");
  const Graph star_sub = gen_one_subdivision(star);
  CHECK(star_sub.max_degree() == star.max_degree());
  for (int m = star.num_vertices(); m < star_sub.num_vertices(); ++m)
    CHECK(star_sub.degree(m) == 2);
}

TEST_CASE("subdivided complete graphs") {
  CHECK(testsupport::isomorphic(gen_subdivision_complete(3), gen_named("cycle 6")));

  const Graph k4s = gen_subdivision_complete(4);
  CHECK(k4s.num_vertices() == 10);
  CHECK(k4s.num_edges() == 12);
  const Graph k5s = gen_subdivision_complete(5);
  CHECK(k5s.num_vertices() == 15);
  CHECK(k5s.num_edges() == 20);

  for (int nv = 3; nv <= 6; ++nv) {
    const Graph g = gen_subdivision_complete(nv);
    CHECK(g.bipartition().has_value());
    CHECK(g.girth() == 6);
    CHECK(g.max_degree() == nv - 1);
  }
  CHECK_THROWS_AS(gen_subdivision_complete(0), std::invalid_argument);
}

TEST_CASE("bipartite random graphs") {
  CHECK(gen_bipartite_random(6, 0.0, 1).num_edges() == 0);

  const Graph full = gen_bipartite_random(5, 1.0, 1);
  CHECK(full.num_edges() == 25);
  CHECK(testsupport::isomorphic(full, gen_named("complete_bipartite 5 5")));

  CHECK_THROWS_AS(gen_bipartite_random(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_bipartite_random(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_bipartite_random(0, 0.5, 1), std::invalid_argument);

  const Graph a = gen_bipartite_random(20, 0.3, 42);
  const Graph b = gen_bipartite_random(20, 0.3, 42);
  CHECK(a.edges() == b.edges());
  const Graph c = gen_bipartite_random(20, 0.3, 43);
  CHECK(a.edges() != c.edges());

  for (const auto& [u, v] : a.edges()) {
    CHECK(u < 20);
    CHECK(v >= 20);
    CHECK(v < 40);
  }
}

TEST_CASE("random regular graphs with girth floor") {
  const auto g = gen_random_regular_girth(10, 3, 5, 7);
  REQUIRE(g.has_value());
  CHECK(g->num_vertices() == 10);
  for (int v = 0; v < 10; ++v) CHECK(g->degree(v) == 3);
  CHECK(g->girth() >= 5);

  CHECK_THROWS_AS(gen_random_regular_girth(5, 3, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_regular_girth(10, 3, 2, 7), std::invalid_argument);
  CHECK_FALSE(gen_random_regular_girth(4, 5, 3, 7).has_value());

  const auto x = gen_random_regular_girth(16, 3, 4, 11);
  const auto y = gen_random_regular_girth(16, 3, 4, 11);
  REQUIRE(x.has_value());
  REQUIRE(y.has_value());
  CHECK(x->edges() == y->edges());
}

TEST_CASE("projective plane incidence graphs") {
  const Graph fano = gen_projective_incidence(2);
  CHECK(fano.num_vertices() == 14);
  CHECK(fano.num_edges() == 21);
  for (int v = 0; v < 14; ++v) CHECK(fano.degree(v) == 3);
  CHECK(fano.girth() == 6);
  CHECK(testsupport::isomorphic(fano, gen_named("heawood")));

  const Graph q3 = gen_projective_incidence(3);
  CHECK(q3.num_vertices() == 26);
  CHECK(q3.num_edges() == 52);
  for (int v = 0; v < 26; ++v) CHECK(q3.degree(v) == 4);
  CHECK(q3.girth() == 6);

  // Two points share at most one line, so no 4-cycles anywhere.
  for (int u = 0; u < q3.num_vertices(); ++u)
    for (int v = u + 1; v < q3.num_vertices(); ++v)
      CHECK(q3.codegree(u, v) <= 1);

  CHECK_THROWS_AS(gen_projective_incidence(4), std::invalid_argument);
  CHECK_THROWS_AS(gen_projective_incidence(1), std::invalid_argument);
}

TEST_CASE("named presets") {
  CHECK(testsupport::isomorphic(gen_named("star 3"), gen_named("complete_bipartite 1 3")));

  const Graph cube = gen_named("hypercube 3");
  CHECK(cube.num_vertices() == 8);
  CHECK(cube.num_edges() == 12);
  CHECK(cube.bipartition().has_value());
  CHECK(cube.girth() == 4);

  const Graph pet = gen_named("petersen");
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  CHECK(pet.girth() == 5);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

  const Graph hea = gen_named("heawood");
  CHECK(hea.num_vertices() == 14);
  CHECK(hea.num_edges() == 21);
  CHECK(hea.girth() == 6);

  CHECK(gen_named("path 1").num_vertices() == 1);
  CHECK(gen_named("complete 1").num_edges() == 0);

  CHECK_THROWS_AS(gen_named("cycle 2"), std::invalid_argument);
  CHECK_THROWS_AS(gen_named("moebius"), std::invalid_argument);
  CHECK_THROWS_AS(gen_named("hypercube 21"), std::invalid_argument);
}
