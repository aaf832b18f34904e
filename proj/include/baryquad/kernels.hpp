#pragma once

#include <span>

// Data-parallel inner loops. Every kernel exists twice with the same
// signature: `omp` is what the library calls, `serial` is the plain-loop
// reference the tests compare it against. Each output element is computed
// by the same sequence of floating-point operations in both, so results
// agree bitwise.

namespace baryquad {

namespace serial {

/// logmag[j] = -sum_{k != j} log|x_j - x_k|, sign[j] = sign of
/// 1/prod_{k != j}(x_j - x_k). Nodes must be distinct.
void direct_log_weights(std::span<const double> nodes, std::span<double> logmag,
                        std::span<int> sign);

/// out[i] = sign[i] * exp(logmag[i] - shift).
void exp_shifted(std::span<const double> logmag, std::span<const int> sign,
                 double shift, std::span<double> out);

/// Second barycentric form at each xs[i]; exact node hits return the sample.
void second_form(std::span<const double> nodes, std::span<const double> weights,
                 std::span<const double> samples, std::span<const double> xs,
                 std::span<double> out);

/// max_i |a[i] - b[i]|; a NaN anywhere makes the result NaN.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// Newton refinement, in long double, of the zeros of the degree-n monic
/// polynomial with recurrence shifts `a` (n entries) and sqrt(b_k) in
/// `sqrtb` (n-1 entries). Node j is written x = anchor[j] + dir[j] * t[j] so
/// that a distance to a support endpoint keeps full relative accuracy. On
/// return t holds the refined offsets (the input is kept where Newton does
/// not settle) and log_sum[j] = log sum_{k<n} q_k(x_j)^2 for the normalised
/// polynomials with q_0 = 1; its negation is the log of the squared first
/// eigenvector component.
void refine_gauss_nodes(std::span<const long double> a, std::span<const long double> sqrtb,
                        std::span<const double> anchor, std::span<const double> dir,
                        std::span<long double> t, std::span<double> log_sum);

}  // namespace serial

namespace omp {

void direct_log_weights(std::span<const double> nodes, std::span<double> logmag,
                        std::span<int> sign);
void exp_shifted(std::span<const double> logmag, std::span<const int> sign,
                 double shift, std::span<double> out);
void second_form(std::span<const double> nodes, std::span<const double> weights,
                 std::span<const double> samples, std::span<const double> xs,
                 std::span<double> out);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
void refine_gauss_nodes(std::span<const long double> a, std::span<const long double> sqrtb,
                        std::span<const double> anchor, std::span<const double> dir,
                        std::span<long double> t, std::span<double> log_sum);

}  // namespace omp

/// Single-point second form shared by both kernel flavours.
double second_form_at(std::span<const double> nodes,
                      std::span<const double> weights,
                      std::span<const double> samples, double x);

}  // namespace baryquad
