#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "baryquad/signed_log.hpp"

namespace baryquad {

struct Jacobi {
  double alpha = 0.0;
  double beta = 0.0;
};

struct Laguerre {
  double alpha = 0.0;
};

struct Hermite {};

/// One of the classical weights: Jacobi (1-x)^a (1+x)^b on (-1,1),
/// Laguerre x^a e^-x on (0,inf), Hermite e^{-x^2} on the real line.
class WeightFamily {
 public:
  using Variant = std::variant<Jacobi, Laguerre, Hermite>;

  /// Throws DomainError unless alpha, beta > -1.
  static WeightFamily jacobi(double alpha, double beta);
  static WeightFamily laguerre(double alpha);
  static WeightFamily hermite();

  static WeightFamily legendre() { return jacobi(0.0, 0.0); }
  static WeightFamily chebyshev_first() { return jacobi(-0.5, -0.5); }
  static WeightFamily chebyshev_second() { return jacobi(0.5, 0.5); }
  static WeightFamily gegenbauer(double lambda) {
    return jacobi(lambda - 0.5, lambda - 0.5);
  }

  const Variant& get() const { return v_; }
  bool is_jacobi() const { return std::holds_alternative<Jacobi>(v_); }
  bool is_laguerre() const { return std::holds_alternative<Laguerre>(v_); }
  bool is_hermite() const { return std::holds_alternative<Hermite>(v_); }

  /// First parameter (alpha) of Jacobi and Laguerre, 0 for Hermite.
  double alpha() const;
  /// Second Jacobi parameter, 0 for the other families.
  double beta() const;

  /// Support endpoints; +-infinity where unbounded.
  double lower() const;
  double upper() const;

  std::string name() const;

  friend bool operator==(const WeightFamily& a, const WeightFamily& b);

 private:
  explicit WeightFamily(Variant v) : v_(v) {}
  Variant v_;
};

/// Monic recurrence p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x).
/// `a` holds a_0..a_{n-1}, `b` holds b_1..b_{n-1}, mu0 is the total mass.
struct RecurrenceCoefficients {
  std::vector<double> a;
  std::vector<double> b;
  double mu0 = 0.0;
};

/// log of the total mass of the weight.
double log_mu0(const WeightFamily& family);

RecurrenceCoefficients recurrence_coefficients(const WeightFamily& family,
                                               int n);

/// The same recurrence in long double, holding sqrt(b_k) for k = 1..n-1.
/// Feeds the extended-precision polishing of Gauss nodes.
struct ExtendedRecurrence {
  std::vector<long double> a;
  std::vector<long double> sqrtb;
};

ExtendedRecurrence extended_recurrence(const WeightFamily& family, int n);

/// Classical (Szego) normalized P_n^{(a,b)}, L_n^{(a)} or H_n at x,
/// computed by forward recurrence.
double evaluate(const WeightFamily& family, int n, double x);

/// Leading coefficient k_n and norm h_n of the classical polynomial of
/// degree n, in signed-log form.
std::pair<SignedLog, SignedLog> leading_and_norm(const WeightFamily& family,
                                                 int n);

/// Coefficients of the hypergeometric-type ODE
///   varphi(x) y'' + phi(x) y' + nu_n y = 0
/// satisfied by the family, together with k_n and h_n.
struct HypergeometricData {
  WeightFamily family;
  double varphi[3];  // c0 + c1 x + c2 x^2
  double phi[2];     // d0 + d1 x

  double varphi_at(double x) const {
    return varphi[0] + x * (varphi[1] + x * varphi[2]);
  }
  double phi_at(double x) const { return phi[0] + phi[1] * x; }
  /// nu_n; accepts any non-negative n so that nu_{2n+2} is available.
  double nu(double n) const;
  SignedLog leading(int n) const { return leading_and_norm(family, n).first; }
  SignedLog norm(int n) const { return leading_and_norm(family, n).second; }
};

HypergeometricData hypergeometric_data(const WeightFamily& family);

enum class WeightKind { Full, Simplified };

/// Common factor relating the barycentric weights of the n+1 roots of the
/// degree-(n+1) polynomial to sqrt(varphi(x_j) w_j). Simplified returns 1.
/// n = -1 (an empty set of roots) is accepted so that Radau and Lobatto
/// rules with no interior nodes share the same path.
SignedLog constant_C(const WeightFamily& family, int n, WeightKind kind);

}  // namespace baryquad
