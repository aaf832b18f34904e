#include "baryquad/polys.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "baryquad/errors.hpp"

namespace baryquad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_degree(int n) {
  if (n < 0) throw ArgumentError("polynomial degree must be non-negative");
}

}  // namespace

WeightFamily WeightFamily::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw DomainError("Jacobi weight requires alpha > -1 and beta > -1");
  }
  return WeightFamily(Jacobi{alpha, beta});
}

WeightFamily WeightFamily::laguerre(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("Laguerre weight requires alpha > -1");
  }
  return WeightFamily(Laguerre{alpha});
}

WeightFamily WeightFamily::hermite() { return WeightFamily(Hermite{}); }

double WeightFamily::alpha() const {
  return std::visit(overloaded{[](const Jacobi& j) { return j.alpha; },
                               [](const Laguerre& l) { return l.alpha; },
                               [](const Hermite&) { return 0.0; }},
                    v_);
}

double WeightFamily::beta() const {
  if (auto* j = std::get_if<Jacobi>(&v_)) return j->beta;
  return 0.0;
}

double WeightFamily::lower() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(overloaded{[](const Jacobi&) { return -1.0; },
                               [](const Laguerre&) { return 0.0; },
                               [](const Hermite&) { return -inf; }},
                    v_);
}

double WeightFamily::upper() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return is_jacobi() ? 1.0 : inf;
}

std::string WeightFamily::name() const {
  std::ostringstream os;
  std::visit(overloaded{[&](const Jacobi& j) {
                          os << "jacobi(" << j.alpha << "," << j.beta << ")";
                        },
                        [&](const Laguerre& l) {
                          os << "laguerre(" << l.alpha << ")";
                        },
                        [&](const Hermite&) { os << "hermite"; }},
             v_);
  return os.str();
}

bool operator==(const WeightFamily& a, const WeightFamily& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return a.alpha() == b.alpha() && a.beta() == b.beta();
}

double log_mu0(const WeightFamily& family) {
  return std::visit(
      overloaded{[](const Jacobi& j) {
                   const double s = j.alpha + j.beta;
                   return (s + 1.0) * std::numbers::ln2 +
                          log_gamma(j.alpha + 1.0) + log_gamma(j.beta + 1.0) -
                          log_gamma(s + 2.0);
                 },
                 [](const Laguerre& l) { return log_gamma(l.alpha + 1.0); },
                 [](const Hermite&) {
                   return 0.5 * std::log(std::numbers::pi);
                 }},
      family.get());
}

namespace {

// Monic shifts a_0..a_{n-1} and products b_1..b_{n-1} in the precision T.
template <class T>
void fill_recurrence(const WeightFamily& family, int n, std::vector<T>& ra,
                     std::vector<T>& rb) {
  ra.assign(n, T(0));
  rb.assign(n - 1, T(0));
  std::visit(
      overloaded{
          [&](const Jacobi& j) {
            const T a = j.alpha, b = j.beta, s = a + b;
            ra[0] = (b - a) / (s + 2);
            for (int k = 1; k < n; ++k) {
              const T t = T(2) * k + s;
              ra[k] = (b - a) * (b + a) / (t * (t + 2));
            }
            if (n > 1) {
              // The general expression has a removable 0/0 at k = 1 when
              // a + b = -1; this is its cancelled form.
              rb[0] = 4 * (a + 1) * (b + 1) / ((s + 2) * (s + 2) * (s + 3));
            }
            for (int k = 2; k < n; ++k) {
              const T t = T(2) * k + s;
              rb[k - 1] = 4 * T(k) * (k + a) * (k + b) * (k + s) /
                          (t * t * (t + 1) * (t - 1));
            }
          },
          [&](const Laguerre& l) {
            for (int k = 0; k < n; ++k) ra[k] = T(2) * k + 1 + T(l.alpha);
            for (int k = 1; k < n; ++k) rb[k - 1] = T(k) * (k + T(l.alpha));
          },
          [&](const Hermite&) {
            for (int k = 1; k < n; ++k) rb[k - 1] = T(0.5) * k;
          }},
      family.get());
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(const WeightFamily& family,
                                               int n) {
  if (n < 1) throw ArgumentError("recurrence needs n >= 1");
  RecurrenceCoefficients rc;
  fill_recurrence(family, n, rc.a, rc.b);
  rc.mu0 = std::exp(log_mu0(family));
  return rc;
}

ExtendedRecurrence extended_recurrence(const WeightFamily& family, int n) {
  if (n < 1) throw ArgumentError("recurrence needs n >= 1");
  ExtendedRecurrence rc;
  fill_recurrence(family, n, rc.a, rc.sqrtb);
  for (long double& b : rc.sqrtb) b = std::sqrt(b);
  return rc;
}

double evaluate(const WeightFamily& family, int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  return std::visit(
      overloaded{
          [&](const Jacobi& j) {
            const double a = j.alpha, b = j.beta, s = a + b;
            double p0 = 1.0;
            double p1 = (a + 1.0) + 0.5 * (s + 2.0) * (x - 1.0);
            for (int k = 2; k <= n; ++k) {
              const double t = 2.0 * k + s;
              const double c1 = 2.0 * k * (k + s) * (t - 2.0);
              const double c2 = (t - 1.0) * (t * (t - 2.0) * x + a * a - b * b);
              const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t;
              const double p2 = (c2 * p1 - c3 * p0) / c1;
              p0 = p1;
              p1 = p2;
            }
            return p1;
          },
          [&](const Laguerre& l) {
            double p0 = 1.0;
            double p1 = 1.0 + l.alpha - x;
            for (int k = 2; k <= n; ++k) {
              const double p2 =
                  ((2.0 * k - 1.0 + l.alpha - x) * p1 - (k - 1.0 + l.alpha) * p0) /
                  k;
              p0 = p1;
              p1 = p2;
            }
            return p1;
          },
          [&](const Hermite&) {
            double p0 = 1.0;
            double p1 = 2.0 * x;
            for (int k = 2; k <= n; ++k) {
              const double p2 = 2.0 * x * p1 - 2.0 * (k - 1.0) * p0;
              p0 = p1;
              p1 = p2;
            }
            return p1;
          }},
      family.get());
}

std::pair<SignedLog, SignedLog> leading_and_norm(const WeightFamily& family,
                                                 int n) {
  require_degree(n);
  const double ln2 = std::numbers::ln2;
  return std::visit(
      overloaded{
          [&](const Jacobi& j) -> std::pair<SignedLog, SignedLog> {
            if (n == 0) {
              return {SignedLog::one(), SignedLog::from_log(log_mu0(family))};
            }
            const double a = j.alpha, b = j.beta, s = a + b;
            // Gamma(2n+s+1) split by the duplication formula, z = n + (s+1)/2,
            // so that only ratios of nearby arguments remain.
            const double z = n + 0.5 * (s + 1.0);
            const double lk = (n + s) * ln2 - 0.5 * std::log(std::numbers::pi) +
                              log_gamma_ratio(z, n + 1.0) +
                              log_gamma_ratio(z + 0.5, n + s + 1.0);
            const double lh = (s + 1.0) * ln2 - std::log(2.0 * n + s + 1.0) +
                              log_gamma_ratio(n + a + 1.0, n + 1.0) +
                              log_gamma_ratio(n + b + 1.0, n + s + 1.0);
            return {SignedLog::from_log(lk), SignedLog::from_log(lh)};
          },
          [&](const Laguerre& l) -> std::pair<SignedLog, SignedLog> {
            return {SignedLog::from_log(-log_gamma(n + 1.0), n % 2 == 0 ? 1 : -1),
                    SignedLog::from_log(log_gamma_ratio(n + l.alpha + 1.0, n + 1.0))};
          },
          [&](const Hermite&) -> std::pair<SignedLog, SignedLog> {
            return {SignedLog::from_log(n * ln2),
                    SignedLog::from_log(0.5 * std::log(std::numbers::pi) +
                                        n * ln2 + log_gamma(n + 1.0))};
          }},
      family.get());
}

double HypergeometricData::nu(double n) const {
  return std::visit(
      overloaded{[&](const Jacobi& j) { return n * (n + j.alpha + j.beta + 1.0); },
                 [&](const Laguerre&) { return n; },
                 [&](const Hermite&) { return 2.0 * n; }},
      family.get());
}

HypergeometricData hypergeometric_data(const WeightFamily& family) {
  HypergeometricData d{family, {0.0, 0.0, 0.0}, {0.0, 0.0}};
  std::visit(overloaded{[&](const Jacobi& j) {
                          d.varphi[0] = 1.0;
                          d.varphi[2] = -1.0;
                          d.phi[0] = j.beta - j.alpha;
                          d.phi[1] = -(j.alpha + j.beta + 2.0);
                        },
                        [&](const Laguerre& l) {
                          d.varphi[1] = 1.0;
                          d.phi[0] = 1.0 + l.alpha;
                          d.phi[1] = -1.0;
                        },
                        [&](const Hermite&) {
                          d.varphi[0] = 1.0;
                          d.phi[1] = -2.0;
                        }},
             family.get());
  return d;
}

SignedLog constant_C(const WeightFamily& family, int n, WeightKind kind) {
  if (n < -1) throw ArgumentError("constant_C needs n >= -1");
  if (kind == WeightKind::Simplified) return SignedLog::one();
  const int sigma = (n % 2 == 0) ? 1 : -1;
  const double ln2 = std::numbers::ln2;
  const double lmag = std::visit(
      overloaded{
          [&](const Jacobi& j) {
            const double a = j.alpha, b = j.beta, s = a + b;
            // Gamma(2n+s+3) by the duplication formula with z = n + (s+3)/2.
            const double z = n + 0.5 * (s + 3.0);
            return (n + 0.5 * (s + 1.0)) * ln2 - 0.5 * std::log(std::numbers::pi) +
                   0.5 * (log_gamma_ratio(z, n + 2.0) + log_gamma_ratio(z, n + s + 2.0) +
                          log_gamma_ratio(z + 0.5, n + a + 2.0) +
                          log_gamma_ratio(z + 0.5, n + b + 2.0));
          },
          [&](const Laguerre& l) {
            return -0.5 * (log_gamma(n + l.alpha + 2.0) + log_gamma(n + 2.0));
          },
          [&](const Hermite&) {
            return 0.5 * (n * ln2 - log_gamma(n + 2.0) -
                          0.5 * std::log(std::numbers::pi));
          }},
      family.get());
  return SignedLog::from_log(lmag, sigma);
}

}  // namespace baryquad
