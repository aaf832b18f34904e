#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "baryquad/eigen.hpp"
#include "baryquad/kernels.hpp"
#include "baryquad/polys.hpp"
#include "oracles.hpp"

using namespace baryquad;

namespace {

std::vector<double> sorted_random(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  std::sort(x.begin(), x.end());
  return x;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) != std::isnan(b[i])) return false;
    if (!std::isnan(a[i]) && a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("direct log weights: serial and parallel agree bitwise") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 7, 300, 3000}) {
    const auto x = sorted_random(rng, n);
    std::vector<double> l1(n), l2(n);
    std::vector<int> s1(n), s2(n);
    serial::direct_log_weights(x, l1, s1);
    omp::direct_log_weights(x, l2, s2);
    CHECK(l1 == l2);
    CHECK(s1 == s2);
    if (n <= 40) {
      const auto ref = oracle::plain_direct_weights(x);
      for (int j = 0; j < n; ++j) {
        CHECK(s1[j] * std::exp(l1[j]) == doctest::Approx(ref[j]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("exp_shifted and max_abs_diff") {
  const std::vector<double> lm{0.0, -1.0, 2.0};
  const std::vector<int> sg{1, -1, 1};
  std::vector<double> a(3), b(3);
  serial::exp_shifted(lm, sg, 2.0, a);
  omp::exp_shifted(lm, sg, 2.0, b);
  CHECK(a == b);
  CHECK(a[2] == 1.0);
  CHECK(a[1] == doctest::Approx(-std::exp(-3.0)));

  std::vector<double> u(10000), v(10000);
  for (int i = 0; i < 10000; ++i) u[i] = v[i] = std::sin(i);
  v[6789] += 0.5;
  CHECK(serial::max_abs_diff(u, v) == 0.5);
  CHECK(omp::max_abs_diff(u, v) == serial::max_abs_diff(u, v));
  v[123] = std::numeric_limits<double>::quiet_NaN();
  CHECK(std::isnan(serial::max_abs_diff(u, v)));
  CHECK(std::isnan(omp::max_abs_diff(u, v)));
  CHECK(serial::max_abs_diff({}, {}) == 0.0);
}

TEST_CASE("second form: serial and parallel agree bitwise, node hits exact") {
  std::mt19937_64 rng(2);
  const int n = 64;
  const auto x = sorted_random(rng, n);
  std::vector<double> lm(n), w(n), f(n);
  std::vector<int> sg(n);
  serial::direct_log_weights(x, lm, sg);
  serial::exp_shifted(lm, sg, *std::max_element(lm.begin(), lm.end()), w);
  for (int j = 0; j < n; ++j) f[j] = std::cos(3 * x[j]);

  std::vector<double> xs = sorted_random(rng, 5000);
  xs.insert(xs.end(), x.begin(), x.end());
  xs.push_back(std::numeric_limits<double>::quiet_NaN());
  std::vector<double> a(xs.size()), b(xs.size());
  serial::second_form(x, w, f, xs, a);
  omp::second_form(x, w, f, xs, b);
  CHECK(same_bits(a, b));
  for (int j = 0; j < n; ++j) CHECK(a[5000 + j] == f[j]);
  CHECK(std::isnan(a.back()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isnan(xs[i])) CHECK(a[i] == second_form_at(x, w, f, xs[i]));
  }
}

TEST_CASE("node refinement: serial and parallel agree bitwise and match the eigensolver") {
  for (const auto& fam : {WeightFamily::jacobi(-0.5, 0.3), WeightFamily::laguerre(1.5),
                          WeightFamily::hermite()}) {
    CAPTURE(fam.name());
    const int n = 257;
    const auto rc = recurrence_coefficients(fam, n);
    std::vector<double> off(rc.b.size());
    for (std::size_t k = 0; k < off.size(); ++k) off[k] = std::sqrt(rc.b[k]);
    const auto ev = eigen_tridiagonal({rc.a, off});
    const auto xr = extended_recurrence(fam, n);
    std::vector<double> anchor(n, 0.0), dir(n, 1.0);
    std::vector<long double> t1(n);
    for (int j = 0; j < n; ++j) t1[j] = ev.values[j];
    if (fam.is_jacobi()) {
      for (int j = 0; j < n; ++j) {
        if (ev.values[j] > 0) {
          anchor[j] = 1.0, dir[j] = -1.0, t1[j] = 1.0L - ev.values[j];
        } else {
          anchor[j] = -1.0, t1[j] = ev.values[j] + 1.0L;
        }
      }
    }
    auto t2 = t1;
    std::vector<double> ls1(n), ls2(n);
    serial::refine_gauss_nodes(xr.a, xr.sqrtb, anchor, dir, t1, ls1);
    omp::refine_gauss_nodes(xr.a, xr.sqrtb, anchor, dir, t2, ls2);
    CHECK(t1 == t2);
    CHECK(ls1 == ls2);
    for (int j = 0; j < n; ++j) {
      const double x = static_cast<double>(anchor[j] + dir[j] * t1[j]);
      CHECK(std::fabs(x - ev.values[j]) <= 1e-12 * (1.0 + std::fabs(ev.values[j])));
      CHECK(std::exp(-ls1[j]) == doctest::Approx(ev.firstsq[j]).epsilon(1e-9));
    }
  }
}
