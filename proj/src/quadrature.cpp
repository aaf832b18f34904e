#include "baryquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "baryquad/eigen.hpp"
#include "baryquad/errors.hpp"
#include "baryquad/kernels.hpp"

namespace baryquad {

namespace {

constexpr double kClampTolerance = 1e-14;

void require_points(int npoints, int minimum) {
  if (npoints < minimum) {
    throw ArgumentError("rule needs at least " + std::to_string(minimum) +
                        " point(s)");
  }
}

// Pull eigenvalues that rounding pushed onto or past the support boundary
// back inside; anything further out is a genuine failure.
void clamp_into_support(std::vector<double>& nodes, double lo, double hi) {
  for (double& x : nodes) {
    if (std::isfinite(lo) && x <= lo) {
      if (lo - x > kClampTolerance) {
        throw NumericalError("Gauss node escaped the support interval");
      }
      x = std::nextafter(lo, 0.0 + hi);
    }
    if (std::isfinite(hi) && x >= hi) {
      if (x - hi > kClampTolerance) {
        throw NumericalError("Gauss node escaped the support interval");
      }
      x = std::nextafter(hi, lo);
    }
  }
}

void check_strictly_increasing(const std::vector<double>& nodes) {
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw NumericalError("quadrature nodes are not strictly increasing");
    }
  }
}

void push_node(QuadratureRule& r, double x, double gap_lower, double gap_upper,
               double log_weight) {
  r.nodes.push_back(x);
  r.gap_lower.push_back(gap_lower);
  r.gap_upper.push_back(gap_upper);
  r.log_weights.push_back(log_weight);
}

void fill_weights_from_logs(QuadratureRule& r) {
  r.weights.resize(r.log_weights.size());
  for (std::size_t i = 0; i < r.log_weights.size(); ++i) {
    if (!std::isfinite(r.log_weights[i])) {
      throw NumericalError("quadrature weight is not positive and finite");
    }
    r.weights[i] = std::exp(r.log_weights[i]);
  }
}

}  // namespace

std::string_view to_string(RuleVariant v) {
  switch (v) {
    case RuleVariant::Gauss: return "gauss";
    case RuleVariant::RadauLeft: return "radau-left";
    case RuleVariant::RadauRight: return "radau-right";
    case RuleVariant::Lobatto: return "lobatto";
  }
  return "?";
}

QuadratureRule gauss_rule(const WeightFamily& family, int npoints) {
  require_points(npoints, 1);
  const RecurrenceCoefficients rc = recurrence_coefficients(family, npoints);
  SymmetricTridiagonal T;
  T.diag = rc.a;
  T.offdiag.resize(rc.b.size());
  std::transform(rc.b.begin(), rc.b.end(), T.offdiag.begin(),
                 [](double b) { return std::sqrt(b); });

  const EigenResult eig = eigen_tridiagonal(T);
  const double lo = family.lower(), hi = family.upper();
  std::vector<double> start = eig.values;
  clamp_into_support(start, lo, hi);

  // Offsets from the nearer finite endpoint, so that 1 - x next to x = 1
  // (or x next to 0 for Laguerre) is what Newton refines.
  const std::size_t n = start.size();
  std::vector<double> anchor(n), dir(n), log_sum(n);
  std::vector<long double> t(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = start[j];
    const bool use_hi = std::isfinite(hi) && (!std::isfinite(lo) || hi - x < x - lo);
    if (use_hi) {
      anchor[j] = hi, dir[j] = -1.0, t[j] = hi - static_cast<long double>(x);
    } else if (std::isfinite(lo)) {
      anchor[j] = lo, dir[j] = 1.0, t[j] = static_cast<long double>(x) - lo;
    } else {
      anchor[j] = 0.0, dir[j] = 1.0, t[j] = x;
    }
  }
  const ExtendedRecurrence xr = extended_recurrence(family, npoints);
  omp::refine_gauss_nodes(xr.a, xr.sqrtb, anchor, dir, t, log_sum);

  QuadratureRule r;
  r.family = family;
  r.variant = RuleVariant::Gauss;
  r.nodes.resize(n);
  r.gap_lower.resize(n);
  r.gap_upper.resize(n);
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const long double x = anchor[j] + dir[j] * t[j];
    r.nodes[j] = static_cast<double>(x);
    r.gap_lower[j] = std::isfinite(lo)
        ? static_cast<double>(dir[j] > 0 && anchor[j] == lo ? t[j] : x - lo)
        : inf;
    r.gap_upper[j] = std::isfinite(hi)
        ? static_cast<double>(dir[j] < 0 ? t[j] : hi - x)
        : inf;
    if (!(r.gap_lower[j] > 0.0) || !(r.gap_upper[j] > 0.0)) {
      throw NumericalError("Gauss node escaped the support interval");
    }
  }
  clamp_into_support(r.nodes, lo, hi);
  check_strictly_increasing(r.nodes);

  const double lmu0 = log_mu0(family);
  r.log_weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.log_weights[j] = lmu0 - log_sum[j];
  fill_weights_from_logs(r);
  return r;
}

double log_lobatto_boundary_weight(double alpha, double beta, int m,
                                   bool right) {
  if (right) std::swap(alpha, beta);
  const double s = alpha + beta;
  return (s + 1.0) * std::numbers::ln2 + log_gamma(beta + 1.0) +
         log_gamma(beta + 2.0) + log_gamma_ratio(m + alpha + 3.0, m + s + 4.0) +
         log_gamma_ratio(m + 2.0, m + beta + 3.0);
}

double log_radau_boundary_weight_jacobi(double alpha, double beta, int m) {
  const double s = alpha + beta;
  return (s + 1.0) * std::numbers::ln2 + log_gamma(beta + 1.0) +
         log_gamma(beta + 2.0) + log_gamma_ratio(m + alpha + 2.0, m + s + 3.0) +
         log_gamma_ratio(m + 2.0, m + beta + 3.0);
}

double log_radau_boundary_weight_laguerre(double alpha, int m) {
  return log_gamma(alpha + 1.0) + log_gamma(alpha + 2.0) +
         log_gamma_ratio(m + 2.0, m + alpha + 3.0);
}

QuadratureRule lobatto_rule_jacobi(double alpha, double beta, int npoints) {
  require_points(npoints, 2);
  const WeightFamily family = WeightFamily::jacobi(alpha, beta);
  const int interior = npoints - 2;
  const int m = interior - 1;

  QuadratureRule r;
  r.family = family;
  r.variant = RuleVariant::Lobatto;
  r.npreassigned_left = 1;
  r.npreassigned_right = 1;
  push_node(r, -1.0, 0.0, 2.0, log_lobatto_boundary_weight(alpha, beta, m, false));
  if (interior > 0) {
    const QuadratureRule g =
        gauss_rule(WeightFamily::jacobi(alpha + 1.0, beta + 1.0), interior);
    for (std::size_t j = 0; j < g.size(); ++j) {
      push_node(r, g.nodes[j], g.gap_lower[j], g.gap_upper[j],
                g.log_weights[j] - std::log(g.gap_lower[j]) - std::log(g.gap_upper[j]));
    }
  }
  push_node(r, 1.0, 2.0, 0.0, log_lobatto_boundary_weight(alpha, beta, m, true));
  fill_weights_from_logs(r);
  return r;
}

QuadratureRule radau_rule_jacobi(double alpha, double beta, int npoints,
                                 Endpoint endpoint) {
  require_points(npoints, 1);
  if (endpoint == Endpoint::Right) {
    QuadratureRule left = radau_rule_jacobi(beta, alpha, npoints, Endpoint::Left);
    QuadratureRule r;
    r.family = WeightFamily::jacobi(alpha, beta);
    r.variant = RuleVariant::RadauRight;
    r.npreassigned_right = 1;
    r.nodes.assign(left.nodes.rbegin(), left.nodes.rend());
    for (double& x : r.nodes) x = -x;
    r.weights.assign(left.weights.rbegin(), left.weights.rend());
    r.log_weights.assign(left.log_weights.rbegin(), left.log_weights.rend());
    r.gap_lower.assign(left.gap_upper.rbegin(), left.gap_upper.rend());
    r.gap_upper.assign(left.gap_lower.rbegin(), left.gap_lower.rend());
    return r;
  }

  const WeightFamily family = WeightFamily::jacobi(alpha, beta);
  const int interior = npoints - 1;
  QuadratureRule r;
  r.family = family;
  r.variant = RuleVariant::RadauLeft;
  r.npreassigned_left = 1;
  push_node(r, -1.0, 0.0, 2.0, log_radau_boundary_weight_jacobi(alpha, beta, interior - 1));
  if (interior > 0) {
    const QuadratureRule g =
        gauss_rule(WeightFamily::jacobi(alpha, beta + 1.0), interior);
    for (std::size_t j = 0; j < g.size(); ++j) {
      push_node(r, g.nodes[j], g.gap_lower[j], g.gap_upper[j],
                g.log_weights[j] - std::log(g.gap_lower[j]));
    }
  }
  fill_weights_from_logs(r);
  return r;
}

QuadratureRule radau_rule_laguerre(double alpha, int npoints) {
  require_points(npoints, 1);
  const WeightFamily family = WeightFamily::laguerre(alpha);
  const int interior = npoints - 1;
  QuadratureRule r;
  r.family = family;
  r.variant = RuleVariant::RadauLeft;
  r.npreassigned_left = 1;
  const double inf = std::numeric_limits<double>::infinity();
  push_node(r, 0.0, 0.0, inf, log_radau_boundary_weight_laguerre(alpha, interior - 1));
  if (interior > 0) {
    const QuadratureRule g =
        gauss_rule(WeightFamily::laguerre(alpha + 1.0), interior);
    for (std::size_t j = 0; j < g.size(); ++j) {
      push_node(r, g.nodes[j], g.gap_lower[j], inf,
                g.log_weights[j] - std::log(g.gap_lower[j]));
    }
  }
  fill_weights_from_logs(r);
  return r;
}

QuadratureRule make_rule(const WeightFamily& family, RuleVariant variant,
                         int npoints) {
  if (variant == RuleVariant::Gauss) return gauss_rule(family, npoints);
  if (family.is_hermite()) {
    throw ArgumentError("variant unsupported for family: Hermite admits Gauss only");
  }
  if (family.is_laguerre()) {
    if (variant != RuleVariant::RadauLeft) {
      throw ArgumentError(
          "variant unsupported for family: Laguerre admits Gauss and left Radau only");
    }
    return radau_rule_laguerre(family.alpha(), npoints);
  }
  switch (variant) {
    case RuleVariant::RadauLeft:
      return radau_rule_jacobi(family.alpha(), family.beta(), npoints,
                               Endpoint::Left);
    case RuleVariant::RadauRight:
      return radau_rule_jacobi(family.alpha(), family.beta(), npoints,
                               Endpoint::Right);
    case RuleVariant::Lobatto:
      return lobatto_rule_jacobi(family.alpha(), family.beta(), npoints);
    case RuleVariant::Gauss:
      break;
  }
  return gauss_rule(family, npoints);
}

QuadratureRule chebyshev_gauss_rule(int npoints) {
  require_points(npoints, 1);
  const double n = npoints;
  QuadratureRule r;
  r.family = WeightFamily::chebyshev_first();
  r.nodes.resize(npoints);
  r.gap_lower.resize(npoints);
  r.gap_upper.resize(npoints);
  // sin form keeps the nodes symmetric and accurate next to +-1; with
  // x_j = -cos(phi_j), 1 + x_j = 2 sin^2(phi_j / 2).
  for (int j = 0; j < npoints; ++j) {
    r.nodes[j] = std::sin(std::numbers::pi * (2.0 * j + 1.0 - n) / (2.0 * n));
    const double lo = std::sin(std::numbers::pi * (2.0 * j + 1.0) / (4.0 * n));
    const double hi = std::sin(std::numbers::pi * (2.0 * (npoints - 1 - j) + 1.0) / (4.0 * n));
    r.gap_lower[j] = 2.0 * lo * lo;
    r.gap_upper[j] = 2.0 * hi * hi;
  }
  r.log_weights.assign(npoints, std::log(std::numbers::pi / n));
  r.weights.assign(npoints, std::numbers::pi / n);
  return r;
}

QuadratureRule chebyshev_lobatto_rule(int npoints) {
  require_points(npoints, 2);
  const double m = npoints - 1;
  QuadratureRule r;
  r.family = WeightFamily::chebyshev_first();
  r.variant = RuleVariant::Lobatto;
  r.npreassigned_left = 1;
  r.npreassigned_right = 1;
  r.nodes.resize(npoints);
  r.weights.assign(npoints, std::numbers::pi / m);
  r.gap_lower.resize(npoints);
  r.gap_upper.resize(npoints);
  for (int j = 0; j < npoints; ++j) {
    r.nodes[j] = std::sin(std::numbers::pi * (2.0 * j - m) / (2.0 * m));
    const double lo = std::sin(std::numbers::pi * j / (2.0 * m));
    const double hi = std::sin(std::numbers::pi * (m - j) / (2.0 * m));
    r.gap_lower[j] = 2.0 * lo * lo;
    r.gap_upper[j] = 2.0 * hi * hi;
  }
  r.nodes.front() = -1.0;
  r.nodes.back() = 1.0;
  r.weights.front() *= 0.5;
  r.weights.back() *= 0.5;
  r.log_weights.resize(npoints);
  std::transform(r.weights.begin(), r.weights.end(), r.log_weights.begin(),
                 [](double w) { return std::log(w); });
  return r;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    if (rule.weights[j] != 0.0) sum += rule.weights[j] * f(rule.nodes[j]);
  }
  return sum;
}

}  // namespace baryquad
