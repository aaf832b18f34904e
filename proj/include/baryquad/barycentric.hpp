#pragma once

#include <span>
#include <vector>

#include "baryquad/polys.hpp"
#include "baryquad/quadrature.hpp"

namespace baryquad {

enum class Normalization { Raw, MaxOne };

/// Per-node barycentric weights. Full weights are exactly 1/l'(x_j) and are
/// stored Raw; simplified weights are only defined up to a common factor
/// and are stored MaxOne (largest magnitude exactly 1, signs kept).
struct BarycentricWeights {
  std::vector<double> nodes;
  std::vector<double> values;
  WeightKind kind = WeightKind::Simplified;
  Normalization normalization = Normalization::MaxOne;
};

/// O(n^2) weights straight from the node products, accumulated in log
/// space. Raw gives Full weights, MaxOne gives Simplified ones.
BarycentricWeights direct_weights(std::span<const double> nodes,
                                  Normalization normalization = Normalization::Raw);

/// Gauss nodes of a classical family: C (-1)^j sqrt(varphi(x_j) w_j).
BarycentricWeights gauss_bary_weights(const QuadratureRule& rule, WeightKind kind);

/// Same weights through the generic hypergeometric expression
/// sigma (-1)^j sqrt(k_{n+1}^2 (2n+2) varphi(x_j) w_j / (nu_{2n+2} h_{n+1})).
BarycentricWeights general_bary_weights(const HypergeometricData& data,
                                        const QuadratureRule& rule,
                                        WeightKind kind);

BarycentricWeights lobatto_bary_weights_jacobi(double alpha, double beta,
                                               const QuadratureRule& rule,
                                               WeightKind kind);

BarycentricWeights radau_bary_weights_jacobi(double alpha, double beta,
                                             const QuadratureRule& rule,
                                             WeightKind kind);

BarycentricWeights radau_bary_weights_laguerre(double alpha,
                                               const QuadratureRule& rule,
                                               WeightKind kind);

/// Picks the formula matching the rule's family and variant.
BarycentricWeights bary_weights(const QuadratureRule& rule, WeightKind kind);

/// Copy rescaled so that max |value| = 1; the result is Simplified.
BarycentricWeights normalized(const BarycentricWeights& w);

/// Largest elementwise relative deviation between two weight vectors after
/// MaxOne normalisation of both, allowing a single global sign flip.
double max_relative_deviation_up_to_scale(std::span<const double> a,
                                          std::span<const double> b);

/// Same comparison measured against the largest entry (max-norm).
double max_abs_deviation_up_to_scale(std::span<const double> a,
                                     std::span<const double> b);

/// Affine change of variable from [-1,1] to [a,b]. Identity by default.
struct DomainMap {
  double a = -1.0;
  double b = 1.0;

  bool is_identity() const { return a == -1.0 && b == 1.0; }
  double forward(double t) const {
    return is_identity() ? t : a + 0.5 * (b - a) * (t + 1.0);
  }
};

/// Nodes live in the target domain; `bary.nodes` stay on the reference
/// interval, in the same order.
struct Interpolant {
  std::vector<double> nodes;
  BarycentricWeights bary;
  std::vector<double> samples;
  DomainMap map;
};

/// Throws ArgumentError if the sample count does not match.
Interpolant make_interpolant(BarycentricWeights bary, std::vector<double> samples);

/// Interpolant of f sampled at the (mapped) nodes.
template <class F>
Interpolant sample_interpolant(BarycentricWeights bary, const F& f,
                               DomainMap map = {});

Interpolant map_to_domain(const Interpolant& p, double a, double b);

double eval_second_form(const Interpolant& p, double x);
std::vector<double> eval_second_form(const Interpolant& p,
                                     std::span<const double> xs);

/// Requires Full, Raw weights; throws ContractError otherwise.
double eval_first_form(const Interpolant& p, double x);

// ---------------------------------------------------------------------------

template <class F>
Interpolant sample_interpolant(BarycentricWeights bary, const F& f,
                               DomainMap map) {
  std::vector<double> samples(bary.nodes.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    samples[j] = f(map.forward(bary.nodes[j]));
  }
  Interpolant p = make_interpolant(std::move(bary), std::move(samples));
  if (!map.is_identity()) p = map_to_domain(p, map.a, map.b);
  return p;
}

}  // namespace baryquad
