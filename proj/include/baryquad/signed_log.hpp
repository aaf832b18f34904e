#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace baryquad {

/// A real number stored as sign * exp(logmag). Gamma-ratio constants
/// live in this form so that they stay finite far beyond the point where
/// the factorials themselves overflow.
struct SignedLog {
  int sign = 0;  // -1, 0 or +1
  double logmag = -std::numeric_limits<double>::infinity();

  static SignedLog zero() { return {}; }
  static SignedLog one() { return {1, 0.0}; }

  static SignedLog from_value(double x) {
    if (x == 0.0) return zero();
    return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
  }

  static SignedLog from_log(double logmag, int sign = 1) {
    return {sign, logmag};
  }

  double value() const {
    return sign == 0 ? 0.0 : sign * std::exp(logmag);
  }

  bool is_finite() const {
    return sign == 0 || std::isfinite(logmag);
  }

  SignedLog operator-() const { return {-sign, logmag}; }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {sign * o.sign, logmag + o.logmag};
  }

  SignedLog operator/(const SignedLog& o) const {
    return *this * o.reciprocal();
  }

  SignedLog reciprocal() const { return {sign, -logmag}; }

  /// Principal square root; the sign must be non-negative.
  SignedLog sqrt() const { return {sign, 0.5 * logmag}; }

  SignedLog pow(double p) const { return {sign, p * logmag}; }

  SignedLog abs() const { return {sign == 0 ? 0 : 1, logmag}; }
};

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) { return std::lgamma(x); }

/// log(Gamma(a) / Gamma(b)) for a, b > 0. Subtracting two lgamma values
/// near n log n loses the digits of an O(1) ratio, so large, close
/// arguments go through Stirling's series written as a difference.
inline double log_gamma_ratio(double a, double b) {
  if (a == b) return 0.0;
  constexpr double kStirlingFrom = 10.0;
  if (a < kStirlingFrom || b < kStirlingFrom || std::fabs(a - b) > 0.25 * std::min(a, b)) {
    return log_gamma(a) - log_gamma(b);
  }
  auto tail = [](double x) {
    const double r = 1.0 / x, r2 = r * r;
    return r * (1.0 / 12 + r2 * (-1.0 / 360 + r2 * (1.0 / 1260 + r2 * (-1.0 / 1680 +
           r2 * (1.0 / 1188 + r2 * (-691.0 / 360360 + r2 * (1.0 / 156 +
           r2 * (-3617.0 / 122400))))))));
  };
  // (a - 1/2) log a - a - [(b - 1/2) log b - b], rearranged around d = a - b.
  const double d = a - b;
  return (b - 0.5) * std::log1p(d / b) + d * (std::log(a) - 1.0) + (tail(a) - tail(b));
}

}  // namespace baryquad
