#pragma once

#include <string>
#include <vector>

#include "baryquad/barycentric.hpp"
#include "baryquad/quadrature.hpp"

namespace baryquad {

enum class ErrorNorm { MaxGrid, WeightedL2, WeightedL1 };

std::string_view to_string(ErrorNorm norm);

/// A convergence study: interpolate a builtin function on the nodes of
/// `family`/`variant` for every n in [nmin, nmax] (step nstep) and measure
/// the error in `norm`. n counts interpolation points.
struct ExperimentSpec {
  std::string function = "runge";
  WeightFamily family = WeightFamily::jacobi(-0.5, -0.25);
  RuleVariant variant = RuleVariant::Gauss;
  int nmin = 10;
  int nmax = 500;
  int nstep = 10;
  ErrorNorm norm = ErrorNorm::MaxGrid;
};

/// Spec with the defaults of the named example (runge, expinv, bessel, airy).
ExperimentSpec default_experiment(const std::string& function);

/// Throws ArgumentError when the range is empty, the norm does not fit the
/// function, or the family cannot carry the function's domain.
void validate(const ExperimentSpec& spec);

/// Domain the function is interpolated on: [-1,1] for runge/expinv, [0,1]
/// for bessel (the Jacobi beta-endpoint maps to 0), identity otherwise.
DomainMap experiment_domain(const ExperimentSpec& spec);

struct ConvergenceRow {
  int n = 0;
  double error = 0.0;
};

/// Number of equispaced points behind the max-grid error.
inline constexpr int kMaxGridPoints = 10000;
/// Order of the fixed Gauss rules behind the weighted norms.
inline constexpr int kNormRulePoints = 512;

/// Simplified-weight interpolant of the experiment function with n points.
Interpolant build_interpolant(const ExperimentSpec& spec, int npoints);

/// Error of one interpolant under `norm`; the function and domain come
/// from the spec.
class ErrorMeter {
 public:
  explicit ErrorMeter(const ExperimentSpec& spec);
  double operator()(const Interpolant& p) const;

 private:
  ExperimentSpec spec_;
  std::vector<double> points_;
  std::vector<double> weights_;
  std::vector<double> exact_;
};

std::vector<ConvergenceRow> run_convergence(const ExperimentSpec& spec);

}  // namespace baryquad
