#include "baryquad/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "baryquad/errors.hpp"
#include "baryquad/kernels.hpp"

namespace baryquad {

namespace {

// Weights as (sign, log magnitude) per node before exponentiation.
struct LogWeights {
  std::vector<double> logmag;
  std::vector<int> sign;

  explicit LogWeights(std::size_t n) : logmag(n), sign(n) {}
};

BarycentricWeights finish(std::vector<double> nodes, const LogWeights& lw,
                          WeightKind kind) {
  BarycentricWeights out;
  out.nodes = std::move(nodes);
  out.kind = kind;
  out.values.resize(lw.logmag.size());
  double shift = 0.0;
  if (kind == WeightKind::Simplified) {
    out.normalization = Normalization::MaxOne;
    shift = -std::numeric_limits<double>::infinity();
    for (double l : lw.logmag) shift = std::max(shift, l);
  } else {
    out.normalization = Normalization::Raw;
  }
  omp::exp_shifted(lw.logmag, lw.sign, shift, out.values);
  if (kind == WeightKind::Simplified) {
    // exp(0) is exactly 1, but make the MaxOne contract independent of that.
    for (std::size_t i = 0; i < lw.logmag.size(); ++i) {
      if (lw.logmag[i] == shift) out.values[i] = lw.sign[i];
    }
  }
  return out;
}

// values[j] = s0 * (-1)^j * |C| * sqrt(delta_j * r(x_j) * w_j), in log form.
// `log_factor(j)` returns log(delta_j * r(x_j)).
template <class LogFactor>
LogWeights alternating(const QuadratureRule& rule, int s0, double log_c,
                       const LogFactor& log_factor) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rule.size());
  LogWeights lw(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    lw.logmag[j] = log_c + 0.5 * (log_factor(j) + rule.log_weights[j]);
    lw.sign[j] = (j % 2 == 0) ? s0 : -s0;
  }
  return lw;
}

// Endpoint distances; rules assembled by hand may not carry them.
double gap_lower(const QuadratureRule& r, std::ptrdiff_t j) {
  return r.gap_lower.size() == r.size() ? r.gap_lower[j] : r.nodes[j] - r.family.lower();
}
double gap_upper(const QuadratureRule& r, std::ptrdiff_t j) {
  return r.gap_upper.size() == r.size() ? r.gap_upper[j] : r.family.upper() - r.nodes[j];
}

void require_variant(const QuadratureRule& rule, RuleVariant v, const char* what) {
  if (rule.variant != v) {
    throw ArgumentError(std::string(what) + ": rule variant must be " +
                        std::string(to_string(v)));
  }
}

void require_family(const QuadratureRule& rule, const WeightFamily& f,
                    const char* what) {
  if (!(rule.family == f)) {
    throw ArgumentError(std::string(what) + ": rule family " + rule.family.name() +
                        " does not match " + f.name());
  }
}

void require_log_weights(const QuadratureRule& rule) {
  if (rule.log_weights.size() != rule.size() || rule.weights.size() != rule.size()) {
    throw ArgumentError("quadrature rule arrays have inconsistent lengths");
  }
}

// log varphi(x_j): 1 - x^2 = (1 + x)(1 - x), x, or 1.
double log_varphi(const QuadratureRule& r, std::ptrdiff_t j) {
  if (r.family.is_jacobi()) return std::log(gap_lower(r, j)) + std::log(gap_upper(r, j));
  if (r.family.is_laguerre()) return std::log(gap_lower(r, j));
  return 0.0;
}

// varphi(x_j) expanded about the nearer finite endpoint e, so that a root of
// varphi at e does not cost the relative accuracy of x_j - e.
double varphi_near_endpoint(const HypergeometricData& d, const QuadratureRule& r,
                            std::ptrdiff_t j) {
  const double lo = gap_lower(r, j), hi = gap_upper(r, j);
  if (!std::isfinite(lo) && !std::isfinite(hi)) return d.varphi_at(r.nodes[j]);
  const bool use_lo = std::isfinite(lo) && !(hi < lo);
  const double e = use_lo ? r.family.lower() : r.family.upper();
  const double h = use_lo ? lo : -hi;
  const double slope = d.varphi[1] + 2.0 * d.varphi[2] * e;
  return d.varphi_at(e) + h * (slope + h * d.varphi[2]);
}

}  // namespace

BarycentricWeights direct_weights(std::span<const double> nodes,
                                  Normalization normalization) {
  if (nodes.empty()) throw ArgumentError("direct_weights: no nodes");
  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!std::isfinite(sorted[i])) throw ArgumentError("direct_weights: non-finite node");
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw ArgumentError("direct_weights: duplicate nodes");
    }
  }
  LogWeights lw(nodes.size());
  omp::direct_log_weights(nodes, lw.logmag, lw.sign);
  return finish(std::vector<double>(nodes.begin(), nodes.end()), lw,
                normalization == Normalization::Raw ? WeightKind::Full
                                                    : WeightKind::Simplified);
}

BarycentricWeights gauss_bary_weights(const QuadratureRule& rule, WeightKind kind) {
  require_variant(rule, RuleVariant::Gauss, "gauss_bary_weights");
  require_log_weights(rule);
  const int n = static_cast<int>(rule.size()) - 1;
  const SignedLog c = constant_C(rule.family, n, kind);
  LogWeights lw = alternating(rule, c.sign, c.logmag, [&](std::ptrdiff_t j) {
    return log_varphi(rule, j);
  });
  return finish(rule.nodes, lw, kind);
}

BarycentricWeights general_bary_weights(const HypergeometricData& data,
                                        const QuadratureRule& rule,
                                        WeightKind kind) {
  require_variant(rule, RuleVariant::Gauss, "general_bary_weights");
  require_family(rule, data.family, "general_bary_weights");
  require_log_weights(rule);
  const int n = static_cast<int>(rule.size()) - 1;
  SignedLog c = SignedLog::one();
  if (kind == WeightKind::Full) {
    const SignedLog k = data.leading(n + 1);
    const SignedLog h = data.norm(n + 1);
    const double lc = k.logmag + 0.5 * (std::log(2.0 * n + 2.0) -
                                        std::log(data.nu(2.0 * n + 2.0)) - h.logmag);
    c = SignedLog::from_log(lc, n % 2 == 0 ? 1 : -1);
  }
  LogWeights lw = alternating(rule, c.sign, c.logmag, [&](std::ptrdiff_t j) {
    return std::log(varphi_near_endpoint(data, rule, j));
  });
  return finish(rule.nodes, lw, kind);
}

BarycentricWeights lobatto_bary_weights_jacobi(double alpha, double beta,
                                               const QuadratureRule& rule,
                                               WeightKind kind) {
  require_variant(rule, RuleVariant::Lobatto, "lobatto_bary_weights_jacobi");
  require_family(rule, WeightFamily::jacobi(alpha, beta), "lobatto_bary_weights_jacobi");
  require_log_weights(rule);
  const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(rule.size()) - 1;
  const SignedLog c = constant_C(WeightFamily::jacobi(alpha + 1.0, beta + 1.0),
                                 static_cast<int>(rule.size()) - 3, kind);
  const double ldelta0 = std::log(beta + 1.0);
  const double ldeltan = std::log(alpha + 1.0);
  LogWeights lw = alternating(rule, c.sign, c.logmag, [&](std::ptrdiff_t j) {
    if (j == 0) return ldelta0;
    if (j == last) return ldeltan;
    return 0.0;
  });
  return finish(rule.nodes, lw, kind);
}

BarycentricWeights radau_bary_weights_jacobi(double alpha, double beta,
                                             const QuadratureRule& rule,
                                             WeightKind kind) {
  require_family(rule, WeightFamily::jacobi(alpha, beta), "radau_bary_weights_jacobi");
  require_log_weights(rule);
  if (rule.variant == RuleVariant::RadauRight) {
    // l_R(x) = (-1)^N l_L(-x), so the right-endpoint weights are the
    // left-endpoint weights of the reflected rule times (-1)^(N+1).
    QuadratureRule left = rule;
    left.variant = RuleVariant::RadauLeft;
    left.family = WeightFamily::jacobi(beta, alpha);
    left.nodes.assign(rule.nodes.rbegin(), rule.nodes.rend());
    for (double& x : left.nodes) x = -x;
    left.weights.assign(rule.weights.rbegin(), rule.weights.rend());
    left.log_weights.assign(rule.log_weights.rbegin(), rule.log_weights.rend());
    left.gap_lower.clear();
    left.gap_upper.clear();
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(rule.size()) - 1; j >= 0; --j) {
      left.gap_lower.push_back(gap_upper(rule, j));
      left.gap_upper.push_back(gap_lower(rule, j));
    }
    BarycentricWeights lb = radau_bary_weights_jacobi(beta, alpha, left, kind);
    const double flip = rule.size() % 2 == 0 ? -1.0 : 1.0;
    BarycentricWeights out;
    out.kind = lb.kind;
    out.normalization = lb.normalization;
    out.nodes = rule.nodes;
    out.values.assign(lb.values.rbegin(), lb.values.rend());
    if (flip < 0.0) {
      for (double& v : out.values) v = -v;
    }
    return out;
  }
  require_variant(rule, RuleVariant::RadauLeft, "radau_bary_weights_jacobi");
  const SignedLog c = constant_C(WeightFamily::jacobi(alpha, beta + 1.0),
                                 static_cast<int>(rule.size()) - 2, kind);
  // The endpoint carries the opposite sign of the leading interior weight
  // in the full weights; simplified weights start positive.
  const int s0 = kind == WeightKind::Full ? -c.sign : 1;
  const double ldelta0 = std::log(beta + 1.0);
  LogWeights lw = alternating(rule, s0, c.logmag, [&](std::ptrdiff_t j) {
    return (j == 0 ? ldelta0 : 0.0) + std::log(gap_upper(rule, j));
  });
  return finish(rule.nodes, lw, kind);
}

BarycentricWeights radau_bary_weights_laguerre(double alpha,
                                               const QuadratureRule& rule,
                                               WeightKind kind) {
  require_variant(rule, RuleVariant::RadauLeft, "radau_bary_weights_laguerre");
  require_family(rule, WeightFamily::laguerre(alpha), "radau_bary_weights_laguerre");
  require_log_weights(rule);
  const SignedLog c = constant_C(WeightFamily::laguerre(alpha + 1.0),
                                 static_cast<int>(rule.size()) - 2, kind);
  const int s0 = kind == WeightKind::Full ? -c.sign : 1;
  const double ldelta0 = std::log(alpha + 1.0);
  LogWeights lw = alternating(rule, s0, c.logmag, [&](std::ptrdiff_t j) {
    return j == 0 ? ldelta0 : 0.0;
  });
  return finish(rule.nodes, lw, kind);
}

BarycentricWeights bary_weights(const QuadratureRule& rule, WeightKind kind) {
  const WeightFamily& f = rule.family;
  switch (rule.variant) {
    case RuleVariant::Gauss:
      return gauss_bary_weights(rule, kind);
    case RuleVariant::Lobatto:
      if (f.is_jacobi()) return lobatto_bary_weights_jacobi(f.alpha(), f.beta(), rule, kind);
      break;
    case RuleVariant::RadauLeft:
      if (f.is_laguerre()) return radau_bary_weights_laguerre(f.alpha(), rule, kind);
      [[fallthrough]];
    case RuleVariant::RadauRight:
      if (f.is_jacobi()) return radau_bary_weights_jacobi(f.alpha(), f.beta(), rule, kind);
      break;
  }
  throw ArgumentError("no barycentric formula for " + f.name() + " " +
                      std::string(to_string(rule.variant)));
}

BarycentricWeights normalized(const BarycentricWeights& w) {
  BarycentricWeights out = w;
  out.kind = WeightKind::Simplified;
  out.normalization = Normalization::MaxOne;
  double m = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (std::fabs(w.values[i]) > m) {
      m = std::fabs(w.values[i]);
      at = i;
    }
  }
  if (m == 0.0) throw ArgumentError("normalized: all weights are zero");
  for (double& v : out.values) v /= m;
  out.values[at] = w.values[at] > 0.0 ? 1.0 : -1.0;
  return out;
}

namespace {

std::vector<double> max_one(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  std::vector<double> out(v.begin(), v.end());
  if (m > 0.0) {
    for (double& x : out) x /= m;
  }
  return out;
}

template <class Measure>
double deviation_up_to_sign(std::span<const double> a, std::span<const double> b,
                            const Measure& measure) {
  if (a.size() != b.size()) throw ArgumentError("weight vectors differ in length");
  const std::vector<double> na = max_one(a), nb = max_one(b);
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < na.size(); ++i) {
    plus = std::max(plus, measure(na[i] - nb[i], nb[i]));
    minus = std::max(minus, measure(na[i] + nb[i], nb[i]));
  }
  return std::min(plus, minus);
}

}  // namespace

double max_relative_deviation_up_to_scale(std::span<const double> a,
                                          std::span<const double> b) {
  return deviation_up_to_sign(a, b, [](double diff, double ref) {
    if (diff == 0.0) return 0.0;
    if (ref == 0.0) return std::numeric_limits<double>::infinity();
    return std::fabs(diff) / std::fabs(ref);
  });
}

double max_abs_deviation_up_to_scale(std::span<const double> a,
                                     std::span<const double> b) {
  return deviation_up_to_sign(a, b, [](double diff, double) { return std::fabs(diff); });
}

Interpolant make_interpolant(BarycentricWeights bary, std::vector<double> samples) {
  if (bary.values.size() != bary.nodes.size()) {
    throw ArgumentError("barycentric weights and nodes differ in length");
  }
  if (samples.size() != bary.nodes.size()) {
    throw ArgumentError("sample count " + std::to_string(samples.size()) +
                        " does not match node count " +
                        std::to_string(bary.nodes.size()));
  }
  Interpolant p;
  p.nodes = bary.nodes;
  p.bary = std::move(bary);
  p.samples = std::move(samples);
  return p;
}

Interpolant map_to_domain(const Interpolant& p, double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ArgumentError("map_to_domain needs finite a < b");
  }
  for (double t : p.bary.nodes) {
    if (!(t >= -1.0 && t <= 1.0)) {
      throw ArgumentError("map_to_domain needs nodes on [-1,1]");
    }
  }
  Interpolant out = p;
  out.map = DomainMap{a, b};
  for (std::size_t j = 0; j < out.nodes.size(); ++j) {
    out.nodes[j] = out.map.forward(p.bary.nodes[j]);
  }
  return out;
}

double eval_second_form(const Interpolant& p, double x) {
  return second_form_at(p.nodes, p.bary.values, p.samples, x);
}

std::vector<double> eval_second_form(const Interpolant& p,
                                     std::span<const double> xs) {
  std::vector<double> out(xs.size());
  omp::second_form(p.nodes, p.bary.values, p.samples, xs, out);
  return out;
}

double eval_first_form(const Interpolant& p, double x) {
  if (p.bary.kind != WeightKind::Full || p.bary.normalization != Normalization::Raw) {
    throw ContractError(
        "first barycentric form needs full, unnormalised weights");
  }
  double sum = 0.0, log_ell = 0.0;
  int sign_ell = 1;
  for (std::size_t j = 0; j < p.nodes.size(); ++j) {
    const double diff = x - p.nodes[j];
    if (diff == 0.0) return p.samples[j];
    sum += p.bary.values[j] * p.samples[j] / diff;
    log_ell += std::log(std::fabs(diff));
    if (diff < 0.0) sign_ell = -sign_ell;
  }
  if (sum == 0.0) return 0.0;
  // Weights were computed for the reference nodes; every difference is
  // scaled by (b-a)/2 on the mapped nodes.
  const double n1 = static_cast<double>(p.nodes.size()) - 1.0;
  const double log_scale = p.map.is_identity()
                               ? 0.0
                               : -n1 * std::log(0.5 * (p.map.b - p.map.a));
  const int sign = sum > 0.0 ? sign_ell : -sign_ell;
  return sign * std::exp(log_ell + std::log(std::fabs(sum)) + log_scale);
}

}  // namespace baryquad
