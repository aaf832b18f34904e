#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "baryquad/eigen.hpp"
#include "baryquad/errors.hpp"
#include "oracles.hpp"

using namespace baryquad;
using doctest::Approx;

TEST_CASE("closed-form small matrices") {
  SUBCASE("1x1") {
    const auto r = eigen_tridiagonal({{0.0}, {}});
    CHECK(r.values == std::vector<double>{0.0});
    CHECK(r.firstsq == std::vector<double>{1.0});
  }
  SUBCASE("monic Legendre, 2x2") {
    const auto r = eigen_tridiagonal({{0.0, 0.0}, {1.0 / std::sqrt(3.0)}});
    CHECK(r.values[0] == Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.values[1] == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.firstsq[0] == Approx(0.5).epsilon(1e-15));
    CHECK(r.firstsq[1] == Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("diag (1,3), offdiag 1") {
    const auto r = eigen_tridiagonal({{1.0, 3.0}, {1.0}});
    CHECK(r.values[0] == Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.values[1] == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
    // First components of (1, 1 -+ sqrt 2) normalised.
    CHECK(r.firstsq[0] == Approx(1.0 / (4.0 - 2.0 * std::sqrt(2.0))).epsilon(1e-14));
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(eigen_tridiagonal({{}, {}}), ArgumentError);
  CHECK_THROWS_AS(eigen_tridiagonal({{1.0, 2.0}, {}}), ArgumentError);
  CHECK_THROWS_AS(eigen_tridiagonal({{1.0, 2.0}, {0.0}}), ArgumentError);
  CHECK_THROWS_AS(eigen_tridiagonal({{1.0, 2.0}, {-1.0}}), ArgumentError);
  CHECK_THROWS_AS(eigen_tridiagonal({{NAN, 2.0}, {1.0}}), ArgumentError);
}

TEST_CASE("random matrices against Sturm bisection and dense eigenvectors") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto [d, e] = oracle::random_tridiagonal(rng, n);
    CAPTURE(trial);
    const EigenResult r = eigen_tridiagonal({d, e});
    const auto sturm = oracle::sturm_eigenvalues(d, e);
    const auto [dense_values, dense_firstsq] = oracle::dense_eigen(d, e);
    REQUIRE(r.values.size() == static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      CHECK(std::fabs(r.values[j] - sturm[j]) <= 1e-11);
      CHECK(std::fabs(r.values[j] - dense_values[j]) <= 1e-11);
      CHECK(std::fabs(r.firstsq[j] - dense_firstsq[j]) <= 1e-10);
      CHECK(r.firstsq[j] >= 0.0);
      if (j > 0) CHECK(r.values[j] > r.values[j - 1]);
    }
  }
}

TEST_CASE("trace, unit first row and determinism on larger matrices") {
  std::mt19937_64 rng(7);
  for (int n : {13, 50, 200, 1000}) {
    CAPTURE(n);
    const auto [d, e] = oracle::random_tridiagonal(rng, n);
    const EigenResult r = eigen_tridiagonal({d, e});
    const double trace = std::accumulate(d.begin(), d.end(), 0.0);
    const double sum = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    CHECK(std::fabs(sum - trace) <= 1e-12 * (1.0 + std::fabs(trace)) * n);
    const double mass = std::accumulate(r.firstsq.begin(), r.firstsq.end(), 0.0);
    CHECK(std::fabs(mass - 1.0) <= 1e-13);
    for (int j = 1; j < n; ++j) CHECK(r.values[j] > r.values[j - 1]);

    const EigenResult again = eigen_tridiagonal({d, e});
    CHECK(again.values == r.values);
    CHECK(again.firstsq == r.firstsq);
  }
}

TEST_CASE("trace within 1e-12 for moderate n") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [d, e] = oracle::random_tridiagonal(rng, 2 + trial);
    const EigenResult r = eigen_tridiagonal({d, e});
    const double trace = std::accumulate(d.begin(), d.end(), 0.0);
    const double sum = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    CHECK(std::fabs(sum - trace) <= 1e-12 * (1.0 + std::fabs(trace)));
  }
}

TEST_CASE("log first components agree with the rotation product") {
  // Jacobi matrices of orthogonal polynomials, where the recurrence is stable.
  for (double a : {-0.5, 0.0, 1.5, 5.0}) {
    for (int n : {1, 2, 9, 40, 100}) {
      const auto rec = oracle::recurrence({oracle::Kind::Jacobi, a, 0.5 * a}, n);
      SymmetricTridiagonal T{rec.a, {}};
      for (int k = 1; k < n; ++k) T.offdiag.push_back(std::sqrt(rec.b[k]));
      const EigenResult r = eigen_tridiagonal(T);
      const auto logs = log_first_components(T, r.values);
      double mass = 0.0;
      for (std::size_t j = 0; j < logs.size(); ++j) {
        CHECK(std::fabs(std::exp(logs[j]) - r.firstsq[j]) <= 1e-12);
        mass += std::exp(logs[j]);
      }
      CHECK(mass == Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("tiny first components keep relative accuracy") {
  // Monic Hermite Jacobi matrix: firstsq_j = w_j / sqrt(pi) falls far below
  // the double range at the extreme nodes for large n.
  const int n = 600;
  SymmetricTridiagonal T{std::vector<double>(n, 0.0), {}};
  for (int k = 1; k < n; ++k) T.offdiag.push_back(std::sqrt(0.5 * k));
  const EigenResult r = eigen_tridiagonal(T);
  const auto logs = log_first_components(T, r.values);
  CHECK(logs.front() < -700.0);
  CHECK(std::isfinite(logs.front()));
  CHECK(logs.front() == Approx(logs.back()).epsilon(1e-10));
}
