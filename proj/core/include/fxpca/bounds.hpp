#pragma once

#include <cstddef>
#include <optional>

namespace fxpca {

/// Closed-form finite-sample deviation bounds for the empirical extreme
/// angular covariance, evaluated in double precision. b_total is the union
/// bound b_prop41 + b_prop42.
struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double delta = 0.0;
  double b_prop41 = 0.0;
  double b_prop42 = 0.0;
  double b_total = 0.0;
  std::optional<double> eigen_gap;
  std::optional<double> rho_bound;
};

/// (1 + 4 sqrt(log(2/delta))) / sqrt(k) + 8 log(2/delta) / (3k).
double bound_prop41(std::size_t k, double delta);

/// sqrt(8 log(4/delta) / k) + 4 log(4/delta) / (3k).
double bound_prop42(std::size_t k, double delta);

/// Both bounds and their sum; requires 1 <= k <= n and 0 < delta < 1.
BoundReport bound_total(std::size_t n, std::size_t k, double delta);

/// b_total / eigen_gap, the high-probability bound on the subspace distance
/// between the empirical and pre-asymptotic eigenspaces. Refuses a nonpositive
/// gap (DegeneracyError). Fills the optional fields of the report and returns
/// the bound.
double eigenspace_bound(BoundReport& report, double eigen_gap);

}  // namespace fxpca
