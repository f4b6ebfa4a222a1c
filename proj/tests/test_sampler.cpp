#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "acyclic/exact.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/sampler.hpp"
#include "support/corpus.hpp"

using namespace acyclic;
using testsupport::corpus;

namespace {

Colouring random_total_colouring(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> values(n);
  for (int& v : values) v = (int)uniform_index(rng, k);
  return Colouring(values, k);
}

}  // namespace

TEST_CASE("sampling a single edge") {
  const Graph edge(2, {{0, 1}});
  const ConstraintSet cs = edge_constraints(edge);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SampleResult r = sample_colouring(edge, cs, PiSpec::all_even_cycles(), 3, seed);
    REQUIRE(r.success);
    CHECK(r.colouring.is_total());
    CHECK(r.colouring.colour(0) != r.colouring.colour(1));
    CHECK(r.steps >= 2);
  }
}

TEST_CASE("sampling breaks the four-cycle") {
  const Graph c4 = gen_named("cycle 4");
  const ConstraintSet cs = edge_constraints(c4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SampleResult r = sample_colouring(c4, cs, PiSpec::all_even_cycles(), 5, seed);
    REQUIRE(r.success);
    CHECK(r.colouring.colours_used() >= 3);
    CHECK(verify_colouring(c4, cs, r.colouring, PiSpec::all_even_cycles()).ok);
  }
}

TEST_CASE("sampler preconditions") {
  const Graph hw = gen_named("heawood");
  const ConstraintSet cs = edge_constraints(hw);
  CHECK_THROWS_AS(sample_colouring(hw, cs, PiSpec::all_even_cycles(), 4, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_colouring(hw, edge_constraints(gen_named("cycle 4")),
                                   PiSpec::all_even_cycles(), 7, 0),
                  std::invalid_argument);

  PiSpec bad = PiSpec::from_family(enumerate_even_cycles(hw, 6));
  bad.gamma_free_filter = ConstraintSet(14);
  CHECK_THROWS_AS(sample_colouring(hw, cs, bad, 7, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_colouring(hw, cs, Colouring(14, 7), bad), std::invalid_argument);
}

TEST_CASE("sampler respects the step budget") {
  const Graph hw = gen_named("heawood");
  const ConstraintSet cs = edge_constraints(hw);
  const SampleResult r = sample_colouring(hw, cs, PiSpec::all_even_cycles(), 7, 1, 3);
  CHECK_FALSE(r.success);
  CHECK(r.steps <= 3);
  CHECK_FALSE(r.colouring.is_total());
}

TEST_CASE("sampler is deterministic per seed") {
  const Graph hw = gen_named("heawood");
  const ConstraintSet cs = edge_constraints(hw);
  const SampleResult a = sample_colouring(hw, cs, PiSpec::all_even_cycles(), 7, 123);
  const SampleResult b = sample_colouring(hw, cs, PiSpec::all_even_cycles(), 7, 123);
  REQUIRE(a.success);
  CHECK(a.colouring == b.colouring);
  CHECK(a.steps == b.steps);
}

TEST_CASE("sampled colourings verify on the corpus") {
  for (const auto& entry : corpus()) {
    const Graph& g = entry.graph;
    if (g.num_vertices() == 0) continue;
    const ConstraintSet cs = edge_constraints(g);
    const int k = g.max_degree() + 3;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const SampleResult r = sample_colouring(g, cs, PiSpec::all_even_cycles(), k, seed);
      REQUIRE(r.success);
      const Verdict v = verify_colouring(g, cs, r.colouring, PiSpec::all_even_cycles());
      CHECK(v.ok);
    }
  }
}

TEST_CASE("verification of explicit colourings") {
  const Graph c4 = gen_named("cycle 4");
  const ConstraintSet cs = edge_constraints(c4);

  const Verdict bicoloured =
      verify_colouring(c4, cs, Colouring({0, 1, 0, 1}, 2), PiSpec::all_even_cycles());
  CHECK_FALSE(bicoloured.ok);
  CHECK(bicoloured.constraint_violations.empty());
  REQUIRE(bicoloured.bicoloured_witness.has_value());
  CHECK(bicoloured.bicoloured_witness->size() == 4);

  const Verdict fine =
      verify_colouring(c4, cs, Colouring({0, 1, 2, 1}, 3), PiSpec::all_even_cycles());
  CHECK(fine.ok);

  const Verdict improper =
      verify_colouring(c4, cs, Colouring({0, 0, 1, 1}, 2), PiSpec::all_even_cycles());
  CHECK_FALSE(improper.ok);
  CHECK(improper.constraint_violations ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  const Graph k4 = gen_named("complete 4");
  CHECK(verify_colouring(k4, edge_constraints(k4), Colouring({0, 1, 2, 3}, 4),
                         PiSpec::all_even_cycles())
            .ok);
}

TEST_CASE("monochromatic even cycles are caught without properness") {
  const Graph c4 = gen_named("cycle 4");
  const Verdict v = verify_colouring(c4, ConstraintSet(4), Colouring({0, 0, 0, 0}, 1),
                                     PiSpec::all_even_cycles());
  CHECK_FALSE(v.ok);
  CHECK(v.constraint_violations.empty());
  CHECK(v.bicoloured_witness.has_value());
}

TEST_CASE("explicit families narrow the audit") {
  const Graph c4 = gen_named("cycle 4");
  const ConstraintSet cs = edge_constraints(c4);
  const Colouring phi({0, 1, 0, 1}, 2);

  CHECK_FALSE(verify_colouring(c4, cs, phi,
                               PiSpec::from_family(enumerate_even_cycles(c4, 4)))
                  .ok);
  CHECK(verify_colouring(c4, cs, phi, PiSpec::from_family(CycleFamily(c4, {}))).ok);
}

TEST_CASE("filters exempt cycles from the audit") {
  const Graph c4 = gen_named("cycle 4");
  const ConstraintSet cs = edge_constraints(c4);
  const Colouring phi({0, 1, 0, 1}, 2);

  PiSpec gamma = PiSpec::all_even_cycles();
  gamma.gamma_free_filter = ConstraintSet(4, {{0, 2}});
  CHECK(verify_colouring(c4, cs, phi, gamma).ok);

  PiSpec anti_path = PiSpec::all_even_cycles();
  const std::vector<int> path_order = {0, 1, 2, 3};
  anti_path.antidirected_filter = orient_by_order(c4, path_order);
  CHECK(verify_colouring(c4, cs, phi, anti_path).ok);

  PiSpec anti_alt = PiSpec::all_even_cycles();
  const std::vector<int> alternating = {0, 2, 1, 3};
  anti_alt.antidirected_filter = orient_by_order(c4, alternating);
  CHECK_FALSE(verify_colouring(c4, cs, phi, anti_alt).ok);
}

TEST_CASE("implicit and explicit audits agree") {
  for (const auto& entry : corpus()) {
    const Graph& g = entry.graph;
    if (g.num_vertices() > 10) continue;
    const ConstraintSet cs = edge_constraints(g);
    const PiSpec implicit = PiSpec::all_even_cycles();
    const PiSpec explicit_all =
        PiSpec::from_family(enumerate_even_cycles(g, g.num_vertices()));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Colouring phi = random_total_colouring(g.num_vertices(), 3, seed);
      const Verdict a = verify_colouring(g, cs, phi, implicit);
      const Verdict b = verify_colouring(g, cs, phi, explicit_all);
      CHECK(a.ok == b.ok);
      CHECK(a.constraint_violations == b.constraint_violations);
      CHECK(a.bicoloured_witness.has_value() == b.bicoloured_witness.has_value());
    }
  }
}

TEST_CASE("verdicts are invariant under colour renaming") {
  const Graph hw = gen_named("heawood");
  const ConstraintSet cs = edge_constraints(hw);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Colouring phi = random_total_colouring(14, 4, seed);
    std::vector<int> renamed(phi.values());
    for (int& c : renamed) c = 3 - c;
    const Verdict a = verify_colouring(hw, cs, phi, PiSpec::all_even_cycles());
    const Verdict b =
        verify_colouring(hw, cs, Colouring(renamed, 4), PiSpec::all_even_cycles());
    CHECK(a.ok == b.ok);
  }
}

TEST_CASE("product colouring") {
  const Colouring a({0, 1, 0, 1}, 2);
  const Colouring b({0, 1, 2, 0}, 3);
  const Colouring p = product_colouring(a, b);
  CHECK(p.palette_size() == 6);
  CHECK(p.values() == std::vector<int>{0, 4, 2, 3});

  // Classes of the product are the pairwise intersections.
  const auto pa = a.colour_classes();
  const auto pb = b.colour_classes();
  for (const auto& cls : p.colour_classes()) {
    if (cls.empty()) continue;
    for (std::size_t i = 1; i < cls.size(); ++i) {
      CHECK(a.colour(cls[i]) == a.colour(cls[0]));
      CHECK(b.colour(cls[i]) == b.colour(cls[0]));
    }
  }

  Colouring constant(4, 1);
  for (int v = 0; v < 4; ++v) constant.assign(v, 0);
  const Colouring q = product_colouring(a, constant);
  CHECK(q.colour_classes() == a.colour_classes());
}

TEST_CASE("degenerate pipeline") {
  SUBCASE("tree host") {
    const Graph tree = gen_named("path 5");
    const PipelineResult r = colour_degenerate_pipeline(tree, 3);
    REQUIRE(r.sample.success);
    CHECK(r.colouring.is_total());
    REQUIRE(r.phi0.has_value());
    CHECK(r.phi0->colours_used() <= 3);
    CHECK(r.colouring.palette_size() == r.bound.total);
    CHECK(verify_colouring(tree, edge_constraints(tree), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
  }
  SUBCASE("hexagon host") {
    const Graph c6 = gen_named("cycle 6");
    const PipelineResult r = colour_degenerate_pipeline(c6, 5);
    REQUIRE(r.sample.success);
    CHECK(verify_colouring(c6, edge_constraints(c6), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
    CHECK(r.bound.t == 2);
    CHECK(r.colouring.palette_size() <= 7 * r.bound.k);
  }
  SUBCASE("single edge host") {
    const Graph edge(2, {{0, 1}});
    const PipelineResult r = colour_degenerate_pipeline(edge, 1);
    REQUIRE(r.sample.success);
    CHECK(r.colouring.colour(0) != r.colouring.colour(1));
    CHECK(r.bound.k == 2);
  }
  SUBCASE("empty host") {
    const PipelineResult r = colour_degenerate_pipeline(Graph(), 1);
    CHECK(r.sample.success);
  }
  SUBCASE("random two-trees") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Graph g = testsupport::random_two_tree(30, seed);
      const PipelineResult r = colour_degenerate_pipeline(g, seed);
      REQUIRE(r.sample.success);
      REQUIRE(r.phi0.has_value());
      CHECK(r.phi0->colours_used() <= 7);
      CHECK(r.colouring.palette_size() <= 7 * r.bound.k);
      CHECK(verify_colouring(g, edge_constraints(g), r.colouring,
                             PiSpec::all_even_cycles())
                .ok);
    }
  }
}

TEST_CASE("excluded-even-cycle pipeline") {
  SUBCASE("uncertified needs a palette") {
    const Graph hw = gen_named("heawood");
    CHECK_THROWS_AS(colour_c2t_pipeline(hw, 5, 0), std::invalid_argument);
    const PipelineResult r = colour_c2t_pipeline(hw, 5, 0, 7);
    REQUIRE(r.sample.success);
    CHECK_FALSE(r.bound.certified);
    CHECK(r.colouring.palette_size() == 7);
    CHECK(verify_colouring(hw, edge_constraints(hw), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
  }
  SUBCASE("special pairs stay polychromatic") {
    // Two branch vertices that share three neighbours, plus a pendant.
    const Graph g(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}});
    const PipelineResult r = colour_c2t_pipeline(g, 3, 2, 7);
    REQUIRE(r.sample.success);
    CHECK(r.colouring.colour(0) != r.colouring.colour(1));
    CHECK(verify_colouring(g, edge_constraints(g), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
  }
  SUBCASE("hexagon with a small palette") {
    const Graph c6 = gen_named("cycle 6");
    const PipelineResult r = colour_c2t_pipeline(c6, 3, 1, 4);
    REQUIRE(r.sample.success);
    CHECK(r.colouring.colours_used() >= 3);
    CHECK(verify_colouring(c6, edge_constraints(c6), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
  }
  SUBCASE("certified regime") {
    const Graph star = gen_named("star 30");
    const PipelineResult r = colour_c2t_pipeline(star, 3, 0);
    REQUIRE(r.sample.success);
    CHECK(r.bound.certified);
    CHECK(r.colouring.palette_size() == r.bound.k);
    CHECK(r.bound.k == bound_c2t(30, 3).k);
    CHECK(verify_colouring(star, edge_constraints(star), r.colouring,
                           PiSpec::all_even_cycles())
              .ok);
  }
}

TEST_CASE("sampled colourings beat the exact threshold nowhere") {
  // A sampler success is only an upper-bound witness: its colour count can
  // never undercut the exact acyclic chromatic number.
  for (const char* name : {"cycle 4", "cycle 5", "complete 4"}) {
    const Graph g = gen_named(name);
    const int chi = *chi_a_exact(g).value;
    const ConstraintSet cs = edge_constraints(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SampleResult r =
          sample_colouring(g, cs, PiSpec::all_even_cycles(), g.max_degree() + 3, seed);
      REQUIRE(r.success);
      CHECK(r.colouring.colours_used() >= chi);
    }
  }
}
