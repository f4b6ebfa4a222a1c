#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/graph.hpp"

namespace acyclic {

enum class BoundFamily {
  generic,
  c4free,
  c2t,
  girth7,
  one_acyclic,
  two_acyclic,
  degenerate,
  forest,
};

std::string to_string(BoundFamily family);

// Analytic tail of a cycle-degree profile: D_{2l} = coeff * ratio^l for
// every l >= first_ell. Converges against tau when ratio < tau^2.
struct GeometricTail {
  double coeff = 0;
  double ratio = 0;
  int first_ell = 2;
};

// Per-length cycle-degree bounds feeding the generic palette formula:
// explicit finite entries (length 2l -> D_{2l}) plus an optional tail.
struct CycleProfile {
  std::map<int, double> finite;
  std::optional<GeometricTail> tail;
};

struct SeriesTerm {
  int length = 0;        // 2l, or the first tail length for the tail entry
  double contribution = 0;
};

struct BoundReport {
  BoundFamily family = BoundFamily::generic;
  int delta = 0;
  int t = 0;
  double tau = 0;
  double alpha = 0;
  double gamma = 0;
  double sigma = 0;
  double constraint_degree = 0;  // the Delta(Gamma) term of the formula
  double pre_ceiling = 0;
  long long k = 0;
  long long total = 0;  // product-stage palette; equals k except where noted
  std::vector<SeriesTerm> series_terms;
  bool certified = true;
};

// Palette size ceil(delta_gamma + tau + sum_l D_{2l} / tau^(2l-3)) from a
// cycle-degree profile. Requires tau > 1 and a convergent tail.
BoundReport k_generic(double delta_gamma, double tau, const CycleProfile& profile);

// Minimiser of x + 1/(2(x^3 - x)) over (1, 3], to 1e-9.
double c4free_alpha();

BoundReport bound_c4free(int delta);
BoundReport bound_1acyclic(int delta, int t);
BoundReport bound_degenerate(int delta, int t);
BoundReport bound_c2t(int delta, int t, double gamma = 1.0 / 3.0);
BoundReport bound_girth7(int delta);
BoundReport bound_2acyclic(int delta, int t);
BoundReport bound_forest(int delta, int t);

// W(1): the solution of w * e^w = 1, to full double precision.
double lambert_w1();

// Average-degree lower bound d/2 + 1 for graphs with at least one cycle.
double lower_bound_avg_degree(const Graph& g);

// sqrt((d+1)/2): lower bound for hosts excluding every subdivided tree.
double lower_bound_subdivision(int d);

}  // namespace acyclic
