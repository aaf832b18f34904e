#include "baryquad/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace baryquad {

namespace {

inline void direct_log_weight_at(std::span<const double> nodes, std::ptrdiff_t j,
                                 double& logmag, int& sign) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
  const double xj = nodes[j];
  double acc = 0.0;
  int negatives = 0;
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    if (k == j) continue;
    const double d = xj - nodes[k];
    acc += std::log(std::fabs(d));
    negatives += d < 0.0;
  }
  logmag = -acc;
  sign = (negatives % 2 == 0) ? 1 : -1;
}

// max that lets NaN win, so a blown-up interpolant is never hidden.
inline double nan_max(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
  return a > b ? a : b;
}

// Values past this are scaled down by its square to stay inside the
// long double range; the scale is tracked in log form.
constexpr long double kBig = 0x1p2000L;
constexpr long double kBigInv = 0x1p-2000L;
constexpr long double kLogBig = 2000.0L * 0.693147180559945309417232121458176568L;

// p_n(x) / p_n'(x) for the monic degree-n polynomial, up to a common
// positive scale of both.
long double newton_ratio(std::span<const long double> a, std::span<const long double> sqrtb,
                         std::span<const long double> inv_sqrtb, long double anchor,
                         long double dir, long double t) {
  const std::size_t n = a.size();
  long double q0 = 0.0L, q1 = 1.0L;   // q_{k-1}, q_k
  long double d0 = 0.0L, d1 = 0.0L;   // derivatives
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const long double xa = (anchor - a[k]) + dir * t;
    const long double sb = k > 0 ? sqrtb[k - 1] : 0.0L;
    const long double inv = inv_sqrtb[k];
    const long double q2 = (xa * q1 - sb * q0) * inv;
    const long double d2 = (q1 + xa * d1 - sb * d0) * inv;
    q0 = q1, q1 = q2, d0 = d1, d1 = d2;
    if (std::fabs(q1) > kBig || std::fabs(d1) > kBig) {
      q0 *= kBigInv, q1 *= kBigInv, d0 *= kBigInv, d1 *= kBigInv;
    }
  }
  const long double xa = (anchor - a[n - 1]) + dir * t;
  const long double sb = n > 1 ? sqrtb[n - 2] : 0.0L;
  const long double p = xa * q1 - sb * q0;
  const long double dp = q1 + xa * d1 - sb * d0;
  return p / dp;
}

double log_christoffel_sum(std::span<const long double> a, std::span<const long double> sqrtb,
                           std::span<const long double> inv_sqrtb, long double x) {
  const std::size_t n = a.size();
  long double q0 = 0.0L, q1 = 1.0L, sum = 1.0L, offset = 0.0L;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const long double sb = k > 0 ? sqrtb[k - 1] : 0.0L;
    const long double q2 = ((x - a[k]) * q1 - sb * q0) * inv_sqrtb[k];
    q0 = q1, q1 = q2;
    if (std::fabs(q1) > kBig) {
      q0 *= kBigInv, q1 *= kBigInv;
      sum *= kBigInv * kBigInv;
      offset += 2.0L * kLogBig;
    }
    sum += q1 * q1;
  }
  return static_cast<double>(std::log(sum) + offset);
}

inline void refine_node(std::span<const long double> a, std::span<const long double> sqrtb,
                        std::span<const long double> inv_sqrtb, long double anchor, long double dir, long double& t,
                        double& log_sum) {
  const long double t0 = t;
  long double tk = t0;
  bool settled = false;
  int polish = 0;
  for (int it = 0; it < 12; ++it) {
    const long double step = dir * newton_ratio(a, sqrtb, inv_sqrtb, anchor, dir, tk);
    if (!std::isfinite(step)) break;
    tk -= step;
    // Once the step is tiny the iteration is quadratic; one more step
    // reaches the rounding level of the long double recurrence.
    if (std::fabs(step) <= 1e-10L * std::fabs(tk) || step == 0.0L) {
      if (++polish == 2 || step == 0.0L) {
        settled = true;
        break;
      }
    }
  }
  // The eigensolver start is already within a few ulps of the root, so a
  // large move means Newton wandered; keep the eigenvalue then.
  const long double x0 = anchor + dir * t0;
  if (settled && std::fabs(tk - t0) <= 1e-7L * (1.0L + std::fabs(x0))) t = tk;
  log_sum = log_christoffel_sum(a, sqrtb, inv_sqrtb, anchor + dir * t);
}

std::vector<long double> reciprocals(std::span<const long double> v) {
  std::vector<long double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = 1.0L / v[i];
  return out;
}

}  // namespace

double second_form_at(std::span<const double> nodes,
                      std::span<const double> weights,
                      std::span<const double> samples, double x) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double diff = x - nodes[j];
    if (diff == 0.0) return samples[j];
    const double t = weights[j] / diff;
    num += t * samples[j];
    den += t;
  }
  return num / den;
}

namespace serial {

void direct_log_weights(std::span<const double> nodes, std::span<double> logmag,
                        std::span<int> sign) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    direct_log_weight_at(nodes, j, logmag[j], sign[j]);
  }
}

void exp_shifted(std::span<const double> logmag, std::span<const int> sign,
                 double shift, std::span<double> out) {
  for (std::size_t i = 0; i < logmag.size(); ++i) {
    out[i] = sign[i] * std::exp(logmag[i] - shift);
  }
}

void second_form(std::span<const double> nodes, std::span<const double> weights,
                 std::span<const double> samples, std::span<const double> xs,
                 std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = second_form_at(nodes, weights, samples, xs[i]);
  }
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = nan_max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

void refine_gauss_nodes(std::span<const long double> a, std::span<const long double> sqrtb,
                        std::span<const double> anchor, std::span<const double> dir,
                        std::span<long double> t, std::span<double> log_sum) {
  const std::vector<long double> inv = reciprocals(sqrtb);
  for (std::size_t j = 0; j < t.size(); ++j) {
    refine_node(a, sqrtb, inv, anchor[j], dir[j], t[j], log_sum[j]);
  }
}

}  // namespace serial

namespace omp {

void direct_log_weights(std::span<const double> nodes, std::span<double> logmag,
                        std::span<int> sign) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    direct_log_weight_at(nodes, j, logmag[j], sign[j]);
  }
}

void exp_shifted(std::span<const double> logmag, std::span<const int> sign,
                 double shift, std::span<double> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(logmag.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = sign[i] * std::exp(logmag[i] - shift);
  }
}

void second_form(std::span<const double> nodes, std::span<const double> weights,
                 std::span<const double> samples, std::span<const double> xs,
                 std::span<double> out) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out[i] = second_form_at(nodes, weights, samples, xs[i]);
  }
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(a.size());
  double result = 0.0;
  bool saw_nan = false;
#pragma omp parallel for schedule(static) reduction(max : result) reduction(|| : saw_nan)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const double e = std::fabs(a[i] - b[i]);
    if (std::isnan(e)) {
      saw_nan = true;
    } else if (e > result) {
      result = e;
    }
  }
  return saw_nan ? std::numeric_limits<double>::quiet_NaN() : result;
}

void refine_gauss_nodes(std::span<const long double> a, std::span<const long double> sqrtb,
                        std::span<const double> anchor, std::span<const double> dir,
                        std::span<long double> t, std::span<double> log_sum) {
  const std::vector<long double> inv = reciprocals(sqrtb);
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    refine_node(a, sqrtb, inv, anchor[j], dir[j], t[j], log_sum[j]);
  }
}

}  // namespace omp

}  // namespace baryquad
