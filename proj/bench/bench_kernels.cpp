// Serial reference vs OpenMP kernels. Pass --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "baryquad/eigen.hpp"
#include "baryquad/kernels.hpp"
#include "baryquad/polys.hpp"

using namespace baryquad;

namespace {

std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = -std::cos((2.0 * j + 1.0) * M_PI / (2.0 * n));
  return x;
}

template <auto Kernel>
void BM_direct_log_weights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = chebyshev_nodes(n);
  std::vector<double> logmag(n);
  std::vector<int> sign(n);
  for (auto _ : state) {
    Kernel(x, logmag, sign);
    benchmark::DoNotOptimize(logmag.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * n);
}

template <auto Kernel>
void BM_second_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = chebyshev_nodes(n);
  std::vector<double> w(n), f(n);
  for (int j = 0; j < n; ++j) {
    w[j] = (j % 2 ? -1.0 : 1.0) * std::sin((2.0 * j + 1.0) * M_PI / (2.0 * n));
    f[j] = 1.0 / (1.0 + 25.0 * x[j] * x[j]);
  }
  std::vector<double> xs(10000), out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -1.0 + 2.0 * (i + 0.5) / xs.size();
  for (auto _ : state) {
    Kernel(x, w, f, xs, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * xs.size());
}

template <auto Kernel>
void BM_refine_gauss_nodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightFamily fam = WeightFamily::jacobi(-0.5, -0.25);
  const auto rc = recurrence_coefficients(fam, n);
  std::vector<double> off(rc.b.size());
  std::transform(rc.b.begin(), rc.b.end(), off.begin(), [](double b) { return std::sqrt(b); });
  const auto ev = eigen_tridiagonal({rc.a, off});
  const auto xr = extended_recurrence(fam, n);
  std::vector<double> anchor(n), dir(n), log_sum(n);
  std::vector<long double> t0(n);
  for (int j = 0; j < n; ++j) {
    const bool right = ev.values[j] > 0;
    anchor[j] = right ? 1.0 : -1.0;
    dir[j] = right ? -1.0 : 1.0;
    t0[j] = right ? 1.0L - ev.values[j] : ev.values[j] + 1.0L;
  }
  for (auto _ : state) {
    auto t = t0;
    Kernel(xr.a, xr.sqrtb, anchor, dir, t, log_sum);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * n);
}

template <auto Kernel>
void BM_max_abs_diff(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> a(n), b(n);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (std::size_t i = 0; i < n; ++i) a[i] = g(rng), b[i] = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

}  // namespace

BENCHMARK(BM_direct_log_weights<serial::direct_log_weights>)->Name("direct_log_weights/serial")->Arg(500)->Arg(4000);
BENCHMARK(BM_direct_log_weights<omp::direct_log_weights>)->Name("direct_log_weights/omp")->Arg(500)->Arg(4000)->UseRealTime();
BENCHMARK(BM_second_form<serial::second_form>)->Name("second_form/serial")->Arg(100)->Arg(1000);
BENCHMARK(BM_second_form<omp::second_form>)->Name("second_form/omp")->Arg(100)->Arg(1000)->UseRealTime();
BENCHMARK(BM_refine_gauss_nodes<serial::refine_gauss_nodes>)->Name("refine_gauss_nodes/serial")->Arg(500)->Arg(2000);
BENCHMARK(BM_refine_gauss_nodes<omp::refine_gauss_nodes>)->Name("refine_gauss_nodes/omp")->Arg(500)->Arg(2000)->UseRealTime();
BENCHMARK(BM_max_abs_diff<serial::max_abs_diff>)->Name("max_abs_diff/serial")->Arg(10000)->Arg(1000000);
BENCHMARK(BM_max_abs_diff<omp::max_abs_diff>)->Name("max_abs_diff/omp")->Arg(10000)->Arg(1000000)->UseRealTime();

BENCHMARK_MAIN();
