#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fxpca/covariance.hpp"
#include "fxpca/linalg.hpp"
#include "fxpca/polar.hpp"

namespace fxpca {

struct ScreeComparison {
  std::vector<double> extreme;  // normalized eigenvalues of the top-k covariance
  std::vector<double> full;     // same for the full-sample covariance
};

/// Paired scree series for the extreme and full-sample angular covariances.
ScreeComparison scree_comparison(const PolarSample& polar, std::size_t k);

/// rho distance between the empirical extreme eigenspace of dimension p and a
/// target subspace.
double eigenfunction_recovery(const PolarSample& polar, std::size_t k, std::size_t p,
                              const Subspace& target);

enum class CvMode { RandomCv, TailHoldout };

struct CvConfig {
  std::size_t k = 100;   // extremes count
  std::size_t p = 2;     // subspace dimension
  std::size_t v = 30;    // validation size
  std::size_t reps = 300;
  CvMode mode = CvMode::RandomCv;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// Covariance variants compared by the cross-validation experiment:
///   0 "extreme"   - top-k angles minus the validation set,
///   1 "full"      - all angles minus the validation set,
///   2 "subsample" - random non-validation subsample of the extreme
///                   training size.
struct CvResult {
  static constexpr std::array<const char*, 3> variant_names = {"extreme", "full", "subsample"};
  std::array<std::vector<double>, 3> errors;  // errors[variant][rep]
};

/// Per-replication validation reconstruction errors for the three variants.
/// Validation angles are excluded from every training set and from the
/// threshold computation. RandomCv draws the validation set uniformly from
/// the top-k angles each replication; TailHoldout fixes it to the top-v.
CvResult reconstruction_cv(const PolarSample& polar, const CvConfig& cfg);

struct FiveNumber {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

/// Boxplot statistics (quartiles by linear interpolation).
FiveNumber five_number_summary(std::span<const double> values);

}  // namespace fxpca
