#pragma once

#include <span>
#include <vector>

namespace baryquad {

/// Symmetric tridiagonal matrix; `offdiag` has one fewer entry than
/// `diag` and must be strictly positive.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

struct EigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> firstsq;  // squared first components of unit eigenvectors
};

/// Eigenvalues and squared first eigenvector components of T by the
/// implicit QL method with Wilkinson shifts. Only the first row of the
/// accumulated rotation product is kept, so the cost is O(n^2) time and
/// O(n) memory.
///
/// Throws ArgumentError for malformed input and ConvergenceError when an
/// eigenvalue needs more than 50 sweeps.
EigenResult eigen_tridiagonal(const SymmetricTridiagonal& T);

/// log of the squared first component of the unit eigenvector belonging to
/// each eigenvalue, computed from the three-term recurrence of T. This
/// keeps full relative accuracy for components far below the underflow
/// threshold of their squares. The forward recurrence is only stable for
/// Jacobi matrices of orthogonal polynomials; for an arbitrary T use
/// EigenResult::firstsq.
std::vector<double> log_first_components(const SymmetricTridiagonal& T,
                                         std::span<const double> values);

}  // namespace baryquad
