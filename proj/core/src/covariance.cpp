#include "fxpca/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fxpca {

CovarianceEstimate angular_cov_from_rows(const PolarSample& polar,
                                         std::span<const std::size_t> rows,
                                         CovarianceVariant variant, double threshold) {
  if (rows.empty()) throw DomainError("angular covariance: empty row set");
  SymmetricOperator op(polar.d);
  const double w = polar.grid_weight / static_cast<double>(rows.size());
  for (std::size_t i : rows) {
    if (!polar.angle_defined(i))
      throw DomainError("angular covariance: row " + std::to_string(i + 1) +
                        " has an undefined angle");
    op.add_scaled_outer(polar.angle(i), w);
  }
  return CovarianceEstimate{std::move(op), rows.size(), threshold, variant};
}

CovarianceEstimate empirical_extreme_cov(const PolarSample& polar, std::size_t k) {
  const ExtremeSelection sel = select_extremes(polar, k);
  return angular_cov_from_rows(polar, sel.indices, CovarianceVariant::ExtremeTopK,
                               sel.threshold);
}

CovarianceEstimate empirical_fixed_threshold_cov(const PolarSample& polar, double t) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < polar.n; ++i)
    if (polar.radii[i] > 0.0 && polar.radii[i] >= t) rows.push_back(i);
  if (rows.empty())
    throw DomainError("fixed-threshold covariance: no radius reaches the threshold");
  return angular_cov_from_rows(polar, rows, CovarianceVariant::FixedThreshold, t);
}

CovarianceEstimate empirical_full_cov(const PolarSample& polar) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < polar.n; ++i)
    if (polar.radii[i] > 0.0) rows.push_back(i);
  if (rows.empty()) throw DomainError("full-sample covariance: all radii are zero");
  CovarianceEstimate est =
      angular_cov_from_rows(polar, rows, CovarianceVariant::FullSample, 0.0);
  return est;
}

LeadingSubspace leading_subspace(const CovarianceEstimate& cov, std::size_t p) {
  const std::size_t d = cov.op.dim();
  if (p < 1 || p >= d) throw DomainError("leading_subspace: require 1 <= p < d");
  EigenSystem es = symmetric_eigen(cov.op);
  const double gap = 0.5 * (es.eigenvalue(p - 1) - es.eigenvalue(p));
  LeadingSubspace out{Subspace::leading(es, p), gap, gap <= 0.0, es.eigenvalues()};
  return out;
}

std::vector<double> scree(const CovarianceEstimate& cov) {
  if (!(cov.op.trace() > 0.0)) throw DegeneracyError("scree: operator trace is zero");
  EigenSystem es = symmetric_eigen(cov.op);
  std::vector<double> out = es.eigenvalues();
  double sum = 0.0;
  for (double v : out) sum += v;
  for (double& v : out) v /= sum;
  return out;
}

namespace {

double residual_error(std::span<const double> theta, double sqrt_weight, const Subspace& v) {
  // Rescale to the orthonormal picture, project, take the squared residual.
  std::vector<double> x(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) x[i] = sqrt_weight * theta[i];
  const auto proj = v.project(x);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = x[i] - proj[i];
    err += r * r;
  }
  return err;
}

}  // namespace

double reconstruction_error(const PolarSample& polar, std::span<const std::size_t> rows,
                            const Subspace& v) {
  if (rows.empty()) throw DomainError("reconstruction_error: empty angle set");
  if (v.ambient_dim() != polar.d)
    throw DomainError("reconstruction_error: subspace ambient dim mismatch");
  const double sw = std::sqrt(polar.grid_weight);
  double total = 0.0;
  for (std::size_t i : rows) {
    if (!polar.angle_defined(i))
      throw DomainError("reconstruction_error: undefined angle in row set");
    total += residual_error(polar.angle(i), sw, v);
  }
  return total / static_cast<double>(rows.size());
}

double reconstruction_error(std::span<const double> angles_row_major, std::size_t d,
                            double grid_weight, const Subspace& v) {
  if (d == 0 || angles_row_major.size() % d != 0 || angles_row_major.empty())
    throw DomainError("reconstruction_error: empty angle set");
  if (v.ambient_dim() != d)
    throw DomainError("reconstruction_error: subspace ambient dim mismatch");
  const std::size_t k = angles_row_major.size() / d;
  const double sw = std::sqrt(grid_weight);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    total += residual_error(angles_row_major.subspan(i * d, d), sw, v);
  return total / static_cast<double>(k);
}

}  // namespace fxpca
