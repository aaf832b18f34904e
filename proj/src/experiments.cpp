#include "baryquad/experiments.hpp"

#include <cmath>
#include <numbers>

#include "baryquad/errors.hpp"
#include "baryquad/functions.hpp"
#include "baryquad/kernels.hpp"

namespace baryquad {

std::string_view to_string(ErrorNorm norm) {
  switch (norm) {
    case ErrorNorm::MaxGrid: return "maxgrid";
    case ErrorNorm::WeightedL2: return "weighted-l2";
    case ErrorNorm::WeightedL1: return "weighted-l1";
  }
  return "?";
}

ExperimentSpec default_experiment(const std::string& function) {
  ExperimentSpec s;
  s.function = function;
  if (function == "runge" || function == "expinv") {
    return s;
  }
  if (function == "bessel") {
    s.family = WeightFamily::jacobi(0.0, 0.5);
    s.nmin = 1;
    s.nmax = 20;
    s.nstep = 1;
    s.norm = ErrorNorm::WeightedL2;
    return s;
  }
  if (function == "airy") {
    s.family = WeightFamily::laguerre(0.0);
    s.nmin = 2;
    s.nmax = 100;
    s.nstep = 2;
    s.norm = ErrorNorm::WeightedL1;
    return s;
  }
  throw ArgumentError("unknown experiment '" + function + "'");
}

void validate(const ExperimentSpec& spec) {
  if (spec.nmin < 1 || spec.nmax < spec.nmin || spec.nstep < 1) {
    throw ArgumentError("n-range must be non-empty and ascending");
  }
  const std::string& f = spec.function;
  ErrorNorm expected;
  if (f == "runge" || f == "expinv") {
    expected = ErrorNorm::MaxGrid;
  } else if (f == "bessel") {
    expected = ErrorNorm::WeightedL2;
  } else if (f == "airy") {
    expected = ErrorNorm::WeightedL1;
  } else {
    throw ArgumentError("unknown experiment '" + f + "'");
  }
  if (spec.norm != expected) {
    throw ArgumentError("norm " + std::string(to_string(spec.norm)) +
                        " does not fit experiment " + f + " (expected " +
                        std::string(to_string(expected)) + ")");
  }
  if (f == "airy" ? !spec.family.is_laguerre() : !spec.family.is_jacobi()) {
    throw ArgumentError("family " + spec.family.name() +
                        " cannot carry experiment " + f);
  }
}

DomainMap experiment_domain(const ExperimentSpec& spec) {
  if (spec.function == "bessel") return DomainMap{0.0, 1.0};
  return DomainMap{};
}

Interpolant build_interpolant(const ExperimentSpec& spec, int npoints) {
  const QuadratureRule rule = make_rule(spec.family, spec.variant, npoints);
  BarycentricWeights w = bary_weights(rule, WeightKind::Simplified);
  const auto f = builtin_function(spec.function);
  return sample_interpolant(std::move(w), f, experiment_domain(spec));
}

ErrorMeter::ErrorMeter(const ExperimentSpec& spec) : spec_(spec) {
  validate(spec_);
  const auto f = builtin_function(spec_.function);
  switch (spec_.norm) {
    case ErrorNorm::MaxGrid: {
      const DomainMap map = experiment_domain(spec_);
      const double lo = map.forward(-1.0), hi = map.forward(1.0);
      points_.resize(kMaxGridPoints);
      for (int i = 0; i < kMaxGridPoints; ++i) {
        points_[i] = lo + (hi - lo) * i / (kMaxGridPoints - 1.0);
      }
      points_.back() = hi;
      break;
    }
    case ErrorNorm::WeightedL2: {
      // int_0^1 sqrt(x) g(x) dx with x = (t+1)/2 becomes
      // 2^{-3/2} int_{-1}^{1} (1+t)^{1/2} g dt.
      const QuadratureRule r = gauss_rule(WeightFamily::jacobi(0.0, 0.5), kNormRulePoints);
      const double scale = 0.5 / std::numbers::sqrt2;
      for (std::size_t j = 0; j < r.size(); ++j) {
        points_.push_back(0.5 * (r.nodes[j] + 1.0));
        weights_.push_back(scale * r.weights[j]);
      }
      break;
    }
    case ErrorNorm::WeightedL1: {
      const QuadratureRule r = gauss_rule(WeightFamily::laguerre(0.0), kNormRulePoints);
      points_ = r.nodes;
      weights_ = r.weights;
      break;
    }
  }
  exact_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) exact_[i] = f(points_[i]);
}

double ErrorMeter::operator()(const Interpolant& p) const {
  const std::vector<double> values = eval_second_form(p, points_);
  if (spec_.norm == ErrorNorm::MaxGrid) return omp::max_abs_diff(exact_, values);
  double sum = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    // Weights that underflowed carry no mass; skipping them also keeps a
    // huge p far out on the Laguerre grid from producing 0 * inf.
    if (weights_[i] == 0.0) continue;
    const double e = std::fabs(exact_[i] - values[i]);
    sum += weights_[i] * (spec_.norm == ErrorNorm::WeightedL2 ? e * e : e);
  }
  return sum;
}

std::vector<ConvergenceRow> run_convergence(const ExperimentSpec& spec) {
  const ErrorMeter meter(spec);
  std::vector<ConvergenceRow> rows;
  for (int n = spec.nmin; n <= spec.nmax; n += spec.nstep) {
    rows.push_back({n, meter(build_interpolant(spec, n))});
  }
  return rows;
}

}  // namespace baryquad
