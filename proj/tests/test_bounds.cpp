#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "acyclic/bounds.hpp"
#include "acyclic/generators.hpp"

using namespace acyclic;

TEST_CASE("generic palette formula") {
  CHECK(k_generic(5, 2.0, {}).k == 7);

  CycleProfile one_c4;
  one_c4.finite[4] = 1;
  const double golden_tau = (3 + std::sqrt(5.0)) / 2;
  const BoundReport r = k_generic(2, golden_tau, one_c4);
  CHECK(r.k == 5);
  CHECK(r.pre_ceiling == doctest::Approx(2 + golden_tau + 1 / golden_tau));

  CHECK_THROWS_AS(k_generic(2, 1.0, {}), std::invalid_argument);
  CycleProfile divergent;
  divergent.tail = GeometricTail{1.0, 9.0, 2};
  CHECK_THROWS_AS(k_generic(2, 3.0, divergent), std::invalid_argument);
}

TEST_CASE("analytic tails equal truncated sums") {
  struct Case {
    double delta_gamma, tau, coeff, ratio;
    int first_ell;
  };
  for (const Case& c : {Case{5, 3.0, 1.0, 2.0, 2}, Case{2, 2.5, 0.7, 1.0, 3}}) {
    CycleProfile analytic;
    analytic.tail = GeometricTail{c.coeff, c.ratio, c.first_ell};
    CycleProfile truncated;
    for (int ell = c.first_ell; 2 * ell <= 40; ++ell)
      truncated.finite[2 * ell] = c.coeff * std::pow(c.ratio, ell);
    const double a = k_generic(c.delta_gamma, c.tau, analytic).pre_ceiling;
    const double b = k_generic(c.delta_gamma, c.tau, truncated).pre_ceiling;
    CHECK(std::abs(a - b) <= 1e-9);
  }
}

TEST_CASE("four-cycle-free bound") {
  const BoundReport r = bound_c4free(3);
  CHECK(r.k == 7);
  CHECK(r.pre_ceiling > 6.82);
  CHECK(r.pre_ceiling < 6.832);
  CHECK(r.alpha == doctest::Approx(1.4576).epsilon(1e-3));
  const BoundReport big = bound_c4free(1000);
  CHECK(big.pre_ceiling < 2.763 * 1000 - 1.457);
  CHECK(big.k == 2762);
  CHECK_THROWS_AS(bound_c4free(2), std::invalid_argument);

  for (int delta = 3; delta <= 10000; ++delta)
    CHECK(bound_c4free(delta).pre_ceiling < 2.763 * delta - 1.457);
}

TEST_CASE("four-cycle-free bound matches the generic formula") {
  const double alpha = c4free_alpha();
  const double delta = 3;
  CycleProfile profile;
  profile.tail = GeometricTail{(delta / 2) / std::pow(delta - 1, 3), (delta - 1) * (delta - 1), 3};
  const BoundReport generic = k_generic(delta, alpha * (delta - 1), profile);
  const BoundReport direct = bound_c4free(3);
  CHECK(generic.k == direct.k);
  CHECK(generic.pre_ceiling == doctest::Approx(direct.pre_ceiling).epsilon(1e-9));
}

TEST_CASE("minimized constant is a unimodal minimum") {
  const double alpha = c4free_alpha();
  auto objective = [](double x) { return x + 1 / (2 * (x * x * x - x)); };
  CHECK(objective(alpha) <= objective(alpha - 1e-4));
  CHECK(objective(alpha) <= objective(alpha + 1e-4));
  // One sign change of the finite differences over the bracket.
  int changes = 0;
  bool decreasing = true;
  for (double x = 1.05; x <= 3.0; x += 0.01) {
    const bool step_down = objective(x + 0.01) < objective(x);
    if (step_down != decreasing) {
      ++changes;
      decreasing = step_down;
    }
  }
  CHECK(changes == 1);
}

TEST_CASE("one-short-of-forest bound") {
  CHECK(bound_1acyclic(10, 4).k == 45);
  CHECK(bound_1acyclic(1, 5).k == 6);
  CHECK_THROWS_AS(bound_1acyclic(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(bound_1acyclic(0, 4), std::invalid_argument);
}

TEST_CASE("degenerate-host bound") {
  const BoundReport r = bound_degenerate(8, 1);
  CHECK(r.k == 13);
  CHECK(r.total == 39);

  const BoundReport big = bound_degenerate(1000, 2);
  const double leading = (1 + std::sqrt(2.0)) * std::pow(2000.0, 2.0 / 3.0);
  CHECK((double)big.k >= leading);
  CHECK((double)big.k <= leading + 0.1 * leading);

  for (int delta : {4, 16, 64, 256})
    CHECK(bound_degenerate(delta, 1).k <= bound_degenerate(delta, 2).k);

  CHECK_THROWS_AS(bound_degenerate(1, 1), std::invalid_argument);
}

TEST_CASE("excluded-even-cycle bound") {
  CHECK_NOTHROW(bound_c2t(27, 3));
  CHECK_THROWS_AS(bound_c2t(27, 4), std::invalid_argument);
  CHECK_THROWS_AS(bound_c2t(8, 2), std::invalid_argument);

  // Excess over the 2*delta leading term, in units of t*delta^(2/3), stays
  // under the recorded constant 12.5.
  for (int delta : {27, 125, 1000, 8000, 1000000}) {
    for (int t = 3; t * t * t <= delta; ++t) {
      const BoundReport r = bound_c2t(delta, t);
      const double excess = ((double)r.k - 2.0 * delta) / (t * std::pow((double)delta, 2.0 / 3.0));
      CHECK(excess > 8.0);
      CHECK(excess <= 12.5);
    }
  }
}

TEST_CASE("girth-seven bound") {
  const BoundReport r = bound_girth7(100);
  CHECK(r.k == 208);
  CHECK(r.alpha == doctest::Approx(1.1));
  CHECK(r.sigma == doctest::Approx(2.1637).epsilon(1e-4));

  CHECK_NOTHROW(bound_girth7(9));
  CHECK_THROWS_AS(bound_girth7(2), std::invalid_argument);

  const double winf = 1 / lambert_w1();
  double previous = 1e18;
  for (int delta : {100, 1000, 10000, 100000, 1000000}) {
    const double ratio = (double)bound_girth7(delta).k / delta;
    CHECK(ratio < previous);
    CHECK(ratio > winf);
    previous = ratio;
  }
  CHECK(std::abs((double)bound_girth7(1000000).k / 1000000 - winf) < 0.01);
}

TEST_CASE("two-short-of-forest bound") {
  const BoundReport r = bound_2acyclic(16, 2);
  CHECK(r.k == 161);
  CHECK((double)r.k <= 4.3948 * std::pow(2.0, 0.25) * std::pow(16.0, 1.25) + 16);
  CHECK(r.alpha == doctest::Approx(std::sqrt(2 + 2 * std::sqrt(2.0))).epsilon(1e-6));
  CHECK(2 * std::sqrt(2 + 2 * std::sqrt(2.0)) == doctest::Approx(4.3948).epsilon(1e-4));
  CHECK_THROWS_AS(bound_2acyclic(16, 16), std::invalid_argument);
}

TEST_CASE("forest bound delegates") {
  const BoundReport t4 = bound_forest(8, 4);
  const BoundReport deg = bound_degenerate(8, 2);
  CHECK(t4.k == deg.k);
  CHECK(t4.total == deg.total);
  CHECK(bound_forest(8, 3).k == bound_degenerate(8, 1).k);
  CHECK(bound_forest(8, 2).k == 1);
  CHECK_THROWS_AS(bound_forest(8, 1), std::invalid_argument);
}

TEST_CASE("lambert value") {
  const double w = lambert_w1();
  CHECK(w == doctest::Approx(0.567143290410).epsilon(1e-11));
  CHECK(std::abs(w * std::exp(w) - 1) < 1e-12);
  CHECK(1 / w == doctest::Approx(1.76322).epsilon(1e-4));
}

TEST_CASE("lower bounds") {
  CHECK(lower_bound_avg_degree(gen_named("complete 4")) == doctest::Approx(2.5));
  CHECK(lower_bound_avg_degree(gen_named("cycle 6")) == doctest::Approx(2.0));
  CHECK(lower_bound_avg_degree(gen_named("path 5")) == doctest::Approx(1.8));
  CHECK_THROWS(lower_bound_avg_degree(Graph()));

  CHECK(lower_bound_subdivision(7) == doctest::Approx(2.0));
  CHECK(lower_bound_subdivision(1) == doctest::Approx(1.0));
  CHECK(lower_bound_subdivision(49) == doctest::Approx(5.0));
}

TEST_CASE("reports dominate their own series") {
  const BoundReport reports[] = {bound_c4free(3),      bound_c4free(50),
                                 bound_1acyclic(10, 4), bound_degenerate(8, 1),
                                 bound_degenerate(100, 3), bound_c2t(1000, 3),
                                 bound_girth7(100),    bound_2acyclic(16, 2)};
  for (const BoundReport& r : reports) {
    CHECK((double)r.k >= r.constraint_degree + r.tau - 1e-9);
    CHECK((double)r.k >= r.pre_ceiling - 1e-9);
    double partial = r.constraint_degree + r.tau;
    for (const SeriesTerm& term : r.series_terms) {
      CHECK(term.contribution >= 0);
      partial += term.contribution;
      CHECK((double)r.k + 1e-9 >= partial);
    }
    // Every family except girth7 assembles K as constraint degree plus tau
    // plus its series; girth7 rescales by the Lambert constant instead.
    if (r.family != BoundFamily::girth7)
      CHECK(partial == doctest::Approx(r.pre_ceiling).epsilon(1e-6));
  }
}
