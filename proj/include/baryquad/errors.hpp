#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace baryquad {

/// Invalid weight-family parameters (alpha <= -1 and friends).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bad argument to a construction or evaluation routine.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requested on data of the wrong kind, e.g. the first
/// barycentric form with simplified weights.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Base for failures of the numerics themselves.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tridiagonal eigensolver ran out of iterations on one eigenvalue.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(std::size_t index, const std::string& what)
      : NumericalError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace baryquad
