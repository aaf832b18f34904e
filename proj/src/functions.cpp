#include "baryquad/functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "baryquad/errors.hpp"

namespace baryquad {

namespace {

// Ai(0) and -Ai'(0).
constexpr double kAi0 = 0.355028053887817239260;
constexpr double kAip0 = 0.258819403792806798405;

double airy_maclaurin(double t) {
  const double t3 = t * t * t;
  double f = 1.0, g = t;
  double a = 1.0, b = t;
  for (int k = 1; k < 200; ++k) {
    a *= t3 / ((3.0 * k - 1.0) * (3.0 * k));
    b *= t3 / ((3.0 * k) * (3.0 * k + 1.0));
    f += a;
    g += b;
    if (std::fabs(a) <= 1e-18 * std::fabs(f) && std::fabs(b) <= 1e-18 * std::fabs(g)) {
      break;
    }
  }
  return kAi0 * f - kAip0 * g;
}

// Ai(t) = sqrt(t/3)/pi K_{1/3}(zeta) with
// K_nu(z) = int_0^inf exp(-z cosh u) cosh(nu u) du. The integrand is even
// and analytic in |Im u| < pi/2, so the trapezoidal rule converges
// geometrically in 1/h.
double airy_integral_scaled(double t, double zeta) {
  constexpr double h = 0.05;
  double sum = 0.5;  // u = 0 term, halved
  for (int k = 1; k < 100000; ++k) {
    const double u = k * h;
    const double s = std::sinh(0.5 * u);
    const double term = std::exp(-2.0 * zeta * s * s) * std::cosh(u / 3.0);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return std::sqrt(t / 3.0) / std::numbers::pi * h * sum;
}

// exp(zeta) Ai(t) ~ 1/(2 sqrt(pi) t^{1/4}) sum_k (-1)^k u_k zeta^{-k}.
double airy_asymptotic_scaled(double t, double zeta) {
  double sum = 1.0, u = 1.0, term = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
    const double next = u / std::pow(zeta, k);
    if (next >= std::fabs(term)) break;  // past the smallest term
    term = (k % 2 == 0) ? next : -next;
    sum += term;
    if (next < 1e-17) break;
  }
  return sum / (2.0 * std::sqrt(std::numbers::pi) * std::pow(t, 0.25));
}

}  // namespace

double airy_ai_scaled(double t) {
  if (!(t >= 0.0)) throw ArgumentError("airy_ai_scaled needs t >= 0");
  const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
  if (t <= 1.0) return airy_maclaurin(t) * std::exp(zeta);
  if (t <= 8.0) return airy_integral_scaled(t, zeta);
  return airy_asymptotic_scaled(t, zeta);
}

double airy_ai(double t) {
  const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
  return airy_ai_scaled(t) * std::exp(-zeta);
}

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

double expinv(double x) {
  if (x == 0.0) return 0.0;
  return std::exp(-1.0 / (x * x));
}

double bessel_f(double x) {
  const double c = std::sqrt(2.0 / std::numbers::pi);
  if (x == 0.0) return c;
  return c * std::sin(x) / x;
}

double airy_f(double x) {
  // With t = (1.5 (x+1))^{2/3} the exponent 2/3 t^{3/2} is exactly x + 1,
  // so Ai(t) e^x = e^{-1} * (Ai(t) e^{x+1}); nothing overflows for large x.
  const double t = std::cbrt(2.25 * (x + 1.0) * (x + 1.0));
  return airy_ai_scaled(t) * std::exp(-1.0);
}

std::function<double(double)> builtin_function(std::string_view name) {
  if (name == "runge") return runge;
  if (name == "expinv") return expinv;
  if (name == "bessel") return bessel_f;
  if (name == "airy") return airy_f;
  throw ArgumentError("unknown builtin function '" + std::string(name) + "'");
}

}  // namespace baryquad
