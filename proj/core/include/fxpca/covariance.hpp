#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxpca/linalg.hpp"
#include "fxpca/polar.hpp"

namespace fxpca {

enum class CovarianceVariant { ExtremeTopK, FixedThreshold, FullSample };

/// Uncentered angular second-moment operator, (1/k) sum of theta theta^T over
/// a set of unit angles. The grid weight is folded into the outer products so
/// the matrix represents the operator in an orthonormal basis of the
/// discretized L2 geometry: its trace is 1 and its eigenstructure matches the
/// functional one.
struct CovarianceEstimate {
  SymmetricOperator op;
  std::size_t k_used = 0;
  double threshold = 0.0;
  CovarianceVariant variant = CovarianceVariant::FullSample;
};

/// Second-moment operator of an explicit row set of the polar sample. All
/// rows must have a defined angle.
CovarianceEstimate angular_cov_from_rows(const PolarSample& polar,
                                         std::span<const std::size_t> rows,
                                         CovarianceVariant variant, double threshold);

/// (1/k) sum over the k most extreme angles. Errors propagate from
/// select_extremes.
CovarianceEstimate empirical_extreme_cov(const PolarSample& polar, std::size_t k);

/// Average of theta theta^T over the exceedances {R_i >= t}, divided by the
/// empirical exceedance count. Throws DomainError when nothing exceeds t.
CovarianceEstimate empirical_fixed_threshold_cov(const PolarSample& polar, double t);

/// All angles with positive radius (the t = 0 case).
CovarianceEstimate empirical_full_cov(const PolarSample& polar);

struct LeadingSubspace {
  Subspace subspace;
  double eigen_gap = 0.0;     // (lambda_p - lambda_{p+1}) / 2
  bool degenerate = false;    // eigen gap numerically zero
  std::vector<double> eigenvalues;
};

/// Span of the top-p eigenvectors together with the empirical eigen gap.
/// Requires 1 <= p < d. A zero gap is flagged, not fatal.
LeadingSubspace leading_subspace(const CovarianceEstimate& cov, std::size_t p);

/// Eigenvalues normalized by their sum, nonincreasing. Requires positive trace.
std::vector<double> scree(const CovarianceEstimate& cov);

/// Mean over the given rows of ||theta - P_V theta||^2 (computed directly from
/// the residual). Value in [0,1] for unit angles.
double reconstruction_error(const PolarSample& polar, std::span<const std::size_t> rows,
                            const Subspace& v);

/// Same, for an explicit matrix of unit-norm curves under grid_weight.
double reconstruction_error(std::span<const double> angles_row_major, std::size_t d,
                            double grid_weight, const Subspace& v);

}  // namespace fxpca
