#include <doctest.h>

#include <cmath>
#include <numbers>

#include "baryquad/errors.hpp"
#include "baryquad/polys.hpp"
#include "baryquad/quadrature.hpp"
#include "oracles.hpp"

using namespace baryquad;
using doctest::Approx;

namespace {

std::vector<WeightFamily> sample_families() {
  return {WeightFamily::legendre(),          WeightFamily::chebyshev_first(),
          WeightFamily::jacobi(-0.5, -0.25), WeightFamily::jacobi(0.0, 0.5),
          WeightFamily::jacobi(5.0, 5.0),    WeightFamily::jacobi(-0.9, 2.5),
          WeightFamily::laguerre(0.0),       WeightFamily::laguerre(0.5),
          WeightFamily::laguerre(3.0),       WeightFamily::hermite()};
}

oracle::Family to_oracle(const WeightFamily& f) {
  if (f.is_jacobi()) return {oracle::Kind::Jacobi, f.alpha(), f.beta()};
  if (f.is_laguerre()) return {oracle::Kind::Laguerre, f.alpha(), 0.0};
  return {oracle::Kind::Hermite};
}

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(WeightFamily::jacobi(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(WeightFamily::jacobi(0.0, -1.5), DomainError);
  CHECK_THROWS_AS(WeightFamily::laguerre(-1.0), DomainError);
  CHECK_NOTHROW(WeightFamily::jacobi(-0.999, 7.0));
  CHECK(WeightFamily::gegenbauer(1.0) == WeightFamily::chebyshev_second());
  CHECK(WeightFamily::jacobi(0, 0.5).name() == "jacobi(0,0.5)");
  CHECK(WeightFamily::hermite().lower() == -INFINITY);
  CHECK(WeightFamily::laguerre(1).lower() == 0.0);
  CHECK(WeightFamily::legendre().upper() == 1.0);
}

TEST_CASE("recurrence coefficients: worked cases") {
  SUBCASE("Hermite, 3") {
    const auto r = recurrence_coefficients(WeightFamily::hermite(), 3);
    CHECK(r.a == std::vector<double>{0, 0, 0});
    REQUIRE(r.b.size() == 2);
    CHECK(r.b[0] == 0.5);
    CHECK(r.b[1] == 1.0);
    CHECK(r.mu0 == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  }
  SUBCASE("Legendre, 3") {
    const auto r = recurrence_coefficients(WeightFamily::legendre(), 3);
    CHECK(r.a == std::vector<double>{0, 0, 0});
    CHECK(r.b[0] == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(r.b[1] == Approx(4.0 / 15).epsilon(1e-15));
    CHECK(r.mu0 == Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("Laguerre(0), 2") {
    const auto r = recurrence_coefficients(WeightFamily::laguerre(0), 2);
    CHECK(r.a == std::vector<double>{1, 3});
    CHECK(r.b == std::vector<double>{1});
    CHECK(r.mu0 == Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("alpha + beta = -1 takes the limit at k = 1") {
    // Chebyshev first kind: monic b_1 = 1/2, b_k = 1/4 after.
    const auto r = recurrence_coefficients(WeightFamily::chebyshev_first(), 5);
    CHECK(r.b[0] == Approx(0.5).epsilon(1e-15));
    for (int k = 1; k < 4; ++k) CHECK(r.b[k] == Approx(0.25).epsilon(1e-15));
    CHECK(r.mu0 == Approx(std::numbers::pi).epsilon(1e-14));
    const auto q = recurrence_coefficients(WeightFamily::jacobi(-0.3, -0.7), 3);
    CHECK(std::isfinite(q.b[0]));
    CHECK(q.b[0] > 0);
  }
  CHECK_THROWS_AS(recurrence_coefficients(WeightFamily::legendre(), 0), ArgumentError);
}

TEST_CASE("recurrence coefficients agree with the textbook tables") {
  for (const auto& f : sample_families()) {
    CAPTURE(f.name());
    const auto r = recurrence_coefficients(f, 40);
    const auto o = oracle::recurrence(to_oracle(f), 40);
    CHECK(r.mu0 == Approx(o.mu0).epsilon(1e-13));
    for (int k = 0; k < 40; ++k) {
      CHECK(r.a[k] == Approx(o.a[k]).epsilon(1e-14).scale(1.0));
      if (k >= 1) {
        CHECK(r.b[k - 1] > 0);
        CHECK(r.b[k - 1] == Approx(o.b[k]).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("evaluate: worked cases") {
  CHECK(evaluate(WeightFamily::legendre(), 2, 0.0) == Approx(-0.5).epsilon(1e-15));
  for (double x : {-3.0, 0.0, 0.7, 100.0}) CHECK(evaluate(WeightFamily::hermite(), 0, x) == 1.0);
  CHECK(evaluate(WeightFamily::laguerre(1), 1, 2.0) == Approx(0.0).scale(1.0));
  CHECK(evaluate(WeightFamily::hermite(), 3, 2.0) == Approx(8 * 8 - 12 * 2));
  CHECK(evaluate(WeightFamily::jacobi(1, 2), 1, 0.5) ==
        Approx(0.5 * (1 - 2) + 0.5 * (1 + 2 + 2) * 0.5));
  CHECK_THROWS_AS(evaluate(WeightFamily::hermite(), -1, 0.0), ArgumentError);
}

TEST_CASE("evaluate matches k_n times the monic recurrence") {
  for (const auto& f : sample_families()) {
    CAPTURE(f.name());
    double lo = -0.95, hi = 0.95;
    if (f.is_laguerre()) lo = 0.05, hi = 30.0;
    if (f.is_hermite()) lo = -6.0, hi = 6.0;
    const auto rc = recurrence_coefficients(f, 65);
    for (int n = 0; n <= 64; ++n) {
      CAPTURE(n);
      const double k = leading_and_norm(f, n).first.value();
      std::vector<double> ref(100), got(100);
      double scale = 0.0;
      for (int i = 0; i < 100; ++i) {
        const double x = lo + (hi - lo) * i / 99.0;
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = (x - rc.a[j]) * p0 - (j > 0 ? rc.b[j - 1] * p1 : 0.0);
          p1 = p0;
          p0 = p2;
        }
        ref[i] = k * p0;
        got[i] = evaluate(f, n, x);
        scale = std::max(scale, std::fabs(ref[i]));
      }
      // Relative to the size of the polynomial over the sampled range:
      // pointwise relative error is meaningless next to a root.
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) worst = std::max(worst, std::fabs(got[i] - ref[i]) / scale);
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("leading coefficients and norms") {
  const auto [k2, h2] = leading_and_norm(WeightFamily::legendre(), 2);
  CHECK(k2.value() == Approx(1.5).epsilon(1e-15));
  CHECK(h2.value() == Approx(0.4).epsilon(1e-15));
  CHECK(leading_and_norm(WeightFamily::hermite(), 5).first.value() ==
        Approx(32.0).epsilon(1e-15));
  const SignedLog k3 = leading_and_norm(WeightFamily::laguerre(0), 3).first;
  CHECK(k3.sign == -1);
  CHECK(std::exp(k3.logmag) == Approx(1.0 / 6).epsilon(1e-15));

  for (int n = 0; n < 30; ++n) {
    CHECK(leading_and_norm(WeightFamily::legendre(), n).second.value() ==
          Approx(2.0 / (2 * n + 1)).epsilon(1e-14));
  }
  for (const auto& f : sample_families()) {
    for (int n : {0, 1, 2, 7, 100, 1000, 1000000}) {
      const auto [k, h] = leading_and_norm(f, n);
      CHECK(k.sign != 0);
      CHECK(std::isfinite(k.logmag));
      CHECK(h.sign == 1);
      CHECK(std::isfinite(h.logmag));
    }
  }
}

TEST_CASE("norms agree with Gauss quadrature of p_n^2") {
  for (const auto& f : sample_families()) {
    CAPTURE(f.name());
    const QuadratureRule r = gauss_rule(f, 30);
    for (int n : {0, 1, 5, 12}) {
      CAPTURE(n);
      const double h = integrate(r, [&](double x) {
        const double p = evaluate(f, n, x);
        return p * p;
      });
      CHECK(leading_and_norm(f, n).second.value() == Approx(h).epsilon(1e-11));
    }
  }
}

TEST_CASE("hypergeometric data") {
  const auto j = hypergeometric_data(WeightFamily::jacobi(0.3, 1.5));
  CHECK(j.varphi_at(0.5) == Approx(0.75));
  CHECK(j.varphi_at(1.0) == Approx(0.0).scale(1.0));
  CHECK(j.nu(4) == Approx(4 * (4 + 0.3 + 1.5 + 1)));
  const auto l = hypergeometric_data(WeightFamily::laguerre(2));
  CHECK(l.varphi_at(3.5) == Approx(3.5));
  CHECK(l.nu(7) == Approx(7));
  const auto h = hypergeometric_data(WeightFamily::hermite());
  CHECK(h.varphi_at(-9.0) == 1.0);
  CHECK(h.nu(5) == Approx(10));

  // The ODE varphi p'' + phi p' + nu p = 0, checked by central differences.
  for (const auto& f : sample_families()) {
    CAPTURE(f.name());
    const auto d = hypergeometric_data(f);
    const double x = f.is_laguerre() ? 1.3 : 0.3;
    for (int n : {1, 2, 5}) {
      const double e = 1e-4;
      const double p = evaluate(f, n, x), pp = evaluate(f, n, x + e),
                   pm = evaluate(f, n, x - e);
      const double residual = d.varphi_at(x) * (pp - 2 * p + pm) / (e * e) +
                              d.phi_at(x) * (pp - pm) / (2 * e) + d.nu(n) * p;
      const double scale = std::fabs(d.nu(n) * p) + 1.0;
      CHECK(std::fabs(residual) / scale < 1e-5);
    }
  }
}

TEST_CASE("constant_C") {
  for (int n : {0, 3, 17}) {
    CHECK(constant_C(WeightFamily::jacobi(0.2, 0.7), n, WeightKind::Simplified).value() == 1.0);
  }
  const double c1 = constant_C(WeightFamily::legendre(), 1, WeightKind::Full).value();
  CHECK(c1 == Approx(-24.0 / (std::pow(2.0, 2.5) * std::sqrt(2.0 * 8.0))).epsilon(1e-14));
  CHECK(c1 == Approx(-1.0606601717798212).epsilon(1e-14));
  CHECK(constant_C(WeightFamily::hermite(), 0, WeightKind::Full).value() ==
        Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));

  for (const auto& f : sample_families()) {
    for (int n : {0, 1, 2, 3, 10, 11, 999999, 1000000}) {
      const SignedLog c = constant_C(f, n, WeightKind::Full);
      CHECK(c.sign == (n % 2 == 0 ? 1 : -1));
      CHECK(c.is_finite());
      CHECK(std::isfinite(c.logmag));
    }
  }
}

TEST_CASE("mu0 equals the one-point Gauss weight") {
  for (const auto& f : sample_families()) {
    CAPTURE(f.name());
    const QuadratureRule r = gauss_rule(f, 1);
    CHECK(r.weights[0] == Approx(std::exp(log_mu0(f))).epsilon(1e-14));
  }
}

TEST_CASE("signed-log arithmetic") {
  const SignedLog a = SignedLog::from_value(-3.0), b = SignedLog::from_value(0.5);
  CHECK((a * b).value() == Approx(-1.5));
  CHECK((a / b).value() == Approx(-6.0));
  CHECK((-a).value() == Approx(3.0));
  CHECK(SignedLog::zero().value() == 0.0);
  CHECK((SignedLog::zero() * a).sign == 0);
  CHECK(SignedLog::from_value(4.0).sqrt().value() == Approx(2.0));
  const SignedLog huge = SignedLog::from_log(5000.0);
  CHECK(huge.is_finite());
  CHECK((huge / huge).value() == Approx(1.0));
}
