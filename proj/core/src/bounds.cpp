#include "acyclic/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace acyclic {

std::string to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::generic: return "generic";
    case BoundFamily::c4free: return "c4free";
    case BoundFamily::c2t: return "c2t";
    case BoundFamily::girth7: return "girth7";
    case BoundFamily::one_acyclic: return "1acyclic";
    case BoundFamily::two_acyclic: return "2acyclic";
    case BoundFamily::degenerate: return "degenerate";
    case BoundFamily::forest: return "forest";
  }
  return "unknown";
}

namespace {

long long ceil_guarded(double x) {
  // Tolerate a sliver of upward floating-point noise before the ceiling.
  return static_cast<long long>(std::ceil(x - 1e-9));
}

}  // namespace

BoundReport k_generic(double delta_gamma, double tau, const CycleProfile& profile) {
  if (!(tau > 1.0)) throw std::invalid_argument("k_generic: tau must exceed 1");
  if (delta_gamma < 0.0) throw std::invalid_argument("k_generic: negative constraint degree");
  BoundReport report;
  report.family = BoundFamily::generic;
  report.tau = tau;
  report.constraint_degree = delta_gamma;
  double sum = 0.0;
  for (const auto& [len, d2l] : profile.finite) {
    if (len < 4 || len % 2 != 0)
      throw std::invalid_argument("k_generic: profile lengths must be even and >= 4");
    if (d2l < 0.0) throw std::invalid_argument("k_generic: negative profile entry");
    const double term = d2l / std::pow(tau, len - 3);
    if (term > 0.0) report.series_terms.push_back({len, term});
    sum += term;
  }
  if (profile.tail) {
    const auto& tail = *profile.tail;
    if (tail.first_ell < 2) throw std::invalid_argument("k_generic: tail must start at length 4");
    if (tail.coeff < 0.0 || tail.ratio < 0.0)
      throw std::invalid_argument("k_generic: negative tail parameters");
    const double q = tail.ratio / (tau * tau);
    if (q >= 1.0) throw std::invalid_argument("k_generic: tail does not converge against tau");
    // sum_{l >= l0} coeff * ratio^l / tau^(2l-3) in closed form.
    const double total = tail.coeff * std::pow(tau, 3) * std::pow(q, tail.first_ell) / (1.0 - q);
    if (total > 0.0) report.series_terms.push_back({2 * tail.first_ell, total});
    sum += total;
  }
  report.pre_ceiling = delta_gamma + tau + sum;
  report.k = ceil_guarded(report.pre_ceiling);
  report.total = report.k;
  return report;
}

double c4free_alpha() {
  static const double alpha = [] {
    auto f = [](double x) { return x + 0.5 / (x * x * x - x); };
    // f blows up at 1+ and grows past the minimum, so it is unimodal on
    // the bracket and golden-section search converges.
    double a = 1.000001, b = 3.0;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-9) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    return (a + b) / 2.0;
  }();
  return alpha;
}

BoundReport bound_c4free(int delta) {
  if (delta < 3) throw std::invalid_argument("bound_c4free: delta must be at least 3");
  const double alpha = c4free_alpha();
  const double d = delta;
  CycleProfile profile;
  profile.tail = GeometricTail{d / 2.0 / std::pow(d - 1.0, 3), (d - 1.0) * (d - 1.0), 3};
  BoundReport report = k_generic(d, alpha * (d - 1.0), profile);
  report.family = BoundFamily::c4free;
  report.delta = delta;
  report.alpha = alpha;
  return report;
}

BoundReport bound_1acyclic(int delta, int t) {
  if (t < 4) throw std::invalid_argument("bound_1acyclic: t must be at least 4");
  if (delta < 1) throw std::invalid_argument("bound_1acyclic: delta must be at least 1");
  const double d = delta;
  const double alpha = std::sqrt(2.0 * t - 5.0);
  CycleProfile profile;
  profile.tail = GeometricTail{2.0 * (t - 3.0) / (d * d), d * d, 2};
  BoundReport report = k_generic(d, alpha * d, profile);
  report.family = BoundFamily::one_acyclic;
  report.delta = delta;
  report.t = t;
  report.alpha = alpha;
  return report;
}

BoundReport bound_degenerate(int delta, int t) {
  if (t < 1) throw std::invalid_argument("bound_degenerate: t must be at least 1");
  if (delta < 1) throw std::invalid_argument("bound_degenerate: delta must be at least 1");
  const double x = static_cast<double>(t) * delta;
  if (!(x > 1.0))
    throw std::invalid_argument("bound_degenerate: t * delta must exceed 1");
  const double b = std::pow(x, 2.0 / 3.0);
  const double half_sqrt2 = std::sqrt(0.5);
  const double chain = half_sqrt2 * b / (1.0 - std::pow(x, -1.0 / 3.0));
  BoundReport report;
  report.family = BoundFamily::degenerate;
  report.delta = delta;
  report.t = t;
  report.tau = half_sqrt2 * b;
  report.constraint_degree = b;
  report.series_terms.push_back({4, chain});
  report.pre_ceiling = b + report.tau + chain;
  report.k = ceil_guarded(report.pre_ceiling);
  // Product with the t^2 + t + 1 colour base layer.
  report.total = (static_cast<long long>(t) * t + t + 1) * report.k;
  return report;
}

BoundReport bound_c2t(int delta, int t, double gamma) {
  if (delta < 1) throw std::invalid_argument("bound_c2t: delta must be at least 1");
  if (t < 3 || std::pow(static_cast<double>(t), 3) > static_cast<double>(delta) * (1 + 1e-12))
    throw std::invalid_argument("bound_c2t: need 3 <= t <= delta^(1/3)");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("bound_c2t: gamma must lie in (0, 1)");
  const double d = delta;
  const double tau = d + std::pow(d, 2.0 / 3.0);
  CycleProfile profile;
  profile.finite[4] = 2.0 * t * std::pow(d, 1.0 + gamma);
  profile.tail = GeometricTail{16.0 * t * std::pow(d, gamma - 3.0), d * d, 3};
  BoundReport report = k_generic(d + 4.0 * t * std::pow(d, 1.0 - gamma), tau, profile);
  report.family = BoundFamily::c2t;
  report.delta = delta;
  report.t = t;
  report.gamma = gamma;
  report.certified = std::abs(gamma - 1.0 / 3.0) < 1e-12;
  return report;
}

BoundReport bound_girth7(int delta) {
  if (delta < 3) throw std::invalid_argument("bound_girth7: delta must be at least 3");
  const double d = delta;
  const double alpha = 1.0 + 1.0 / std::sqrt(d);
  const double tau = alpha * d;
  const double a3 = std::pow(alpha, 3);
  const double a5 = std::pow(alpha, 5);
  const double inv_gap = 1.0 / (a3 - alpha);
  const double sigma = 1.0 / (2.0 * (a5 - a3)) + (2.0 / d) * inv_gap * inv_gap;
  BoundReport report;
  report.family = BoundFamily::girth7;
  report.delta = delta;
  report.alpha = alpha;
  report.tau = tau;
  report.sigma = sigma;
  report.series_terms.push_back({6, sigma});
  report.pre_ceiling = (tau + sigma) / lambert_w1() + std::sqrt(d);
  report.k = ceil_guarded(report.pre_ceiling);
  report.total = report.k;
  return report;
}

BoundReport bound_2acyclic(int delta, int t) {
  if (t < 2) throw std::invalid_argument("bound_2acyclic: t must be at least 2");
  if (delta <= t) throw std::invalid_argument("bound_2acyclic: delta must exceed t");
  const double d = delta;
  const double c2 = 2.0 + 2.0 * std::sqrt(2.0);  // square of the leading constant
  const double alpha = std::sqrt(c2) * std::pow(t - 1.0, 0.25);
  const double tau = alpha * std::pow(d, 1.25);
  CycleProfile profile;
  profile.tail = GeometricTail{c2 * std::sqrt(t - 1.0) * std::pow(d, -1.5), d * d, 2};
  BoundReport report = k_generic(d, tau, profile);
  report.family = BoundFamily::two_acyclic;
  report.delta = delta;
  report.t = t;
  report.alpha = alpha;
  return report;
}

BoundReport bound_forest(int delta, int t) {
  if (t < 2) throw std::invalid_argument("bound_forest: t must be at least 2");
  if (delta < 1) throw std::invalid_argument("bound_forest: delta must be at least 1");
  if (t == 2) {
    // Hosts excluding a two-vertex forest have no edges at all.
    BoundReport report;
    report.family = BoundFamily::forest;
    report.delta = delta;
    report.t = t;
    report.pre_ceiling = 1.0;
    report.k = 1;
    report.total = 1;
    return report;
  }
  BoundReport report = bound_degenerate(delta, t - 2);
  report.family = BoundFamily::forest;
  report.t = t;
  return report;
}

double lambert_w1() {
  static const double w1 = [] {
    double w = 0.5;
    for (int i = 0; i < 64; ++i) {
      const double ew = std::exp(w);
      const double step = (w * ew - 1.0) / (ew * (w + 1.0));
      w -= step;
      if (std::abs(step) < 1e-17) break;
    }
    return w;
  }();
  return w1;
}

double lower_bound_avg_degree(const Graph& g) {
  if (g.num_vertices() == 0)
    throw std::invalid_argument("lower_bound_avg_degree: empty graph");
  return g.average_degree() / 2.0 + 1.0;
}

double lower_bound_subdivision(int d) {
  if (d < 1) throw std::invalid_argument("lower_bound_subdivision: d must be at least 1");
  return std::sqrt((d + 1.0) / 2.0);
}

}  // namespace acyclic
