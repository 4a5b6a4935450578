#pragma once

#include <stdexcept>
#include <string>

namespace fxpca {

/// Parameter outside its documented domain (bad k, delta, dimension mismatch, ...).
/// Maps to CLI exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or unusable input data (ragged CSV, non-numeric cell, negative
/// value where a square root is required, ...). Maps to CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical degeneracy: zero eigen gap, constant radii, non-convergence.
/// Maps to CLI exit code 4.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
  DegeneracyError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  /// Diagnostic payload, e.g. the off-diagonal residual of a failed
  /// eigendecomposition. Zero when not applicable.
  double residual() const noexcept { return residual_; }

 private:
  double residual_ = 0.0;
};

}  // namespace fxpca
