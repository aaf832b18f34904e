#include "baryquad/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "baryquad/errors.hpp"

namespace baryquad {

namespace {

constexpr int kMaxSweeps = 50;

void validate(const SymmetricTridiagonal& T) {
  const std::size_t n = T.diag.size();
  if (n == 0) throw ArgumentError("tridiagonal matrix must be non-empty");
  if (T.offdiag.size() + 1 != n) {
    throw ArgumentError("offdiag must have exactly n-1 entries");
  }
  for (double d : T.diag) {
    if (!std::isfinite(d)) throw ArgumentError("non-finite diagonal entry");
  }
  for (double e : T.offdiag) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw ArgumentError("offdiag entries must be finite and positive");
    }
  }
}

}  // namespace

EigenResult eigen_tridiagonal(const SymmetricTridiagonal& T) {
  validate(T);
  const int n = static_cast<int>(T.diag.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> d = T.diag;
  std::vector<double> e(n, 0.0);
  std::copy(T.offdiag.begin(), T.offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);  // first row of the rotation product
  z[0] = 1.0;

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps) {
        throw ConvergenceError(
            static_cast<std::size_t>(l),
            "tridiagonal QL did not converge for eigenvalue " +
                std::to_string(l));
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i;
      for (i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        const double zf = z[i + 1];
        z[i + 1] = s * z[i] + c * zf;
        z[i] = c * z[i] - s * zf;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a] < d[b]; });

  EigenResult out;
  out.values.resize(n);
  out.firstsq.resize(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    out.firstsq[k] = z[order[k]] * z[order[k]];
  }
  return out;
}

std::vector<double> log_first_components(const SymmetricTridiagonal& T,
                                         std::span<const double> values) {
  validate(T);
  const std::size_t n = T.diag.size();
  const double big = std::ldexp(1.0, 500);
  const double shrink = std::ldexp(1.0, -500);
  const double log_shrink2 = 1000.0 * std::log(2.0);

  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double x = values[j];
    // Unnormalised eigenvector with v_0 = 1, rescaled to stay in range.
    double vprev = 0.0, v = 1.0;
    double sum = 1.0, log_offset = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double coupling = k > 0 ? T.offdiag[k - 1] : 0.0;
      const double vnext = ((x - T.diag[k]) * v - coupling * vprev) / T.offdiag[k];
      vprev = v;
      v = vnext;
      sum += v * v;
      if (std::fabs(v) > big) {
        v *= shrink;
        vprev *= shrink;
        sum *= shrink * shrink;
        log_offset += log_shrink2;
      }
    }
    out[j] = -(std::log(sum) + log_offset);
  }
  return out;
}

}  // namespace baryquad
