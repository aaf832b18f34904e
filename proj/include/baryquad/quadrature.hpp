#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "baryquad/polys.hpp"

namespace baryquad {

enum class RuleVariant { Gauss, RadauLeft, RadauRight, Lobatto };

enum class Endpoint { Left, Right };

std::string_view to_string(RuleVariant v);

/// Nodes ascending, preassigned endpoints included. `log_weights` holds the
/// natural log of every weight and stays finite when `weights` underflows.
///
/// gap_lower[j] = x_j - lower and gap_upper[j] = upper - x_j, each accurate
/// to full relative precision even where the rounded node is not (1 - x_j
/// next to x = 1, say). Infinite on an unbounded side.
struct QuadratureRule {
  WeightFamily family = WeightFamily::legendre();
  RuleVariant variant = RuleVariant::Gauss;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
  std::vector<double> gap_lower;
  std::vector<double> gap_upper;
  int npreassigned_left = 0;
  int npreassigned_right = 0;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss rule by Golub-Welsch; exact through degree 2n-1. The
/// eigenvalues are polished by Newton's method in extended precision,
/// measured from the nearer support endpoint, and the weights are the
/// Christoffel numbers at the polished nodes.
QuadratureRule gauss_rule(const WeightFamily& family, int npoints);

/// Gauss-Jacobi-Lobatto rule with both endpoints; exact through 2n-3.
QuadratureRule lobatto_rule_jacobi(double alpha, double beta, int npoints);

/// Gauss-Jacobi-Radau rule with one endpoint; exact through 2n-2.
QuadratureRule radau_rule_jacobi(double alpha, double beta, int npoints,
                                 Endpoint endpoint);

/// Gauss-Laguerre-Radau rule with the node x = 0; exact through 2n-2.
QuadratureRule radau_rule_laguerre(double alpha, int npoints);

/// Dispatches on variant. Throws ArgumentError for combinations the
/// families do not admit (Hermite: Gauss only; Laguerre: Gauss, RadauLeft).
QuadratureRule make_rule(const WeightFamily& family, RuleVariant variant,
                         int npoints);

/// Closed-form Gauss-Chebyshev (first kind) rule, O(n).
QuadratureRule chebyshev_gauss_rule(int npoints);

/// Closed-form Chebyshev-Lobatto (Clenshaw-Curtis points) rule for the
/// weight (1-x^2)^{-1/2}, O(n).
QuadratureRule chebyshev_lobatto_rule(int npoints);

double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f);

/// Exact boundary weight at x = -1 of the (m+3)-point Lobatto rule
/// (m+1 interior nodes), in log form. `right` gives the weight at +1.
double log_lobatto_boundary_weight(double alpha, double beta, int m,
                                   bool right);

/// Boundary weight at x = -1 of the (m+2)-point left Radau rule, log form.
double log_radau_boundary_weight_jacobi(double alpha, double beta, int m);

/// Boundary weight at x = 0 of the (m+2)-point Laguerre-Radau rule, log form.
double log_radau_boundary_weight_laguerre(double alpha, int m);

}  // namespace baryquad
