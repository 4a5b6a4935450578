#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxpca/errors.hpp"

namespace fxpca {

/// Dense symmetric d x d matrix with exactly mirrored entries. Represents a
/// (discretized) covariance operator; symmetry is enforced by construction:
/// every mutation writes both triangles from the same product.
class SymmetricOperator {
 public:
  explicit SymmetricOperator(std::size_t dim);

  /// Builds from arbitrary row-major data, symmetrizing as (A + A^T)/2.
  static SymmetricOperator from_row_major(std::size_t dim, std::span<const double> data);
  static SymmetricOperator identity(std::size_t dim);
  static SymmetricOperator diagonal(std::span<const double> entries);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  /// Sets entries (i,j) and (j,i) to the same value.
  void set(std::size_t i, std::size_t j, double value);

  /// Rank-one update: A += weight * v v^T.
  void add_scaled_outer(std::span<const double> v, double weight);

  void add_scaled(const SymmetricOperator& other, double factor);
  void scale(double factor);

  double trace() const;

  /// Row view (equals the column by symmetry).
  std::span<const double> row(std::size_t i) const { return {a_.data() + i * dim_, dim_}; }
  std::span<const double> data() const noexcept { return a_; }

  friend SymmetricOperator operator+(const SymmetricOperator& x, const SymmetricOperator& y);
  friend SymmetricOperator operator-(const SymmetricOperator& x, const SymmetricOperator& y);

 private:
  std::size_t dim_;
  std::vector<double> a_;  // row-major, kept exactly symmetric
};

/// sqrt(sum of squared entries): the Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const SymmetricOperator& a);

/// Entrywise inner product <A,B>_HS.
double hs_inner(const SymmetricOperator& a, const SymmetricOperator& b);

/// Eigendecomposition of a SymmetricOperator: eigenvalues sorted nonincreasing,
/// eigenvector columns orthonormal, deterministic sign convention.
class EigenSystem {
 public:
  EigenSystem(std::vector<double> eigenvalues, std::vector<double> vectors_col_major,
              std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double eigenvalue(std::size_t j) const { return eigenvalues_[j]; }
  std::span<const double> eigenvector(std::size_t j) const {
    return {vectors_.data() + j * dim_, dim_};
  }

 private:
  std::size_t dim_;
  std::vector<double> eigenvalues_;
  std::vector<double> vectors_;  // column-major d x d
};

/// Orthonormal basis of a p-dimensional subspace of R^d (columns Euclidean
/// orthonormal; callers working in a grid-weighted L2 geometry are expected to
/// pass coordinates already rescaled to the orthonormal picture).
class Subspace {
 public:
  /// Takes columns that are already orthonormal within 1e-8; throws DomainError
  /// otherwise.
  Subspace(std::size_t ambient_dim, std::vector<double> basis_col_major);

  /// Gram-Schmidt on raw curves under the grid-weighted inner product; the
  /// stored basis is the sqrt(weight)-rescaled (Euclidean orthonormal) one.
  /// Throws DegeneracyError if the curves are linearly dependent.
  static Subspace from_curves(const std::vector<std::vector<double>>& curves,
                              double grid_weight);

  /// Span of the first p eigenvectors of an EigenSystem.
  static Subspace leading(const EigenSystem& es, std::size_t p);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return p_; }
  std::span<const double> basis_column(std::size_t j) const {
    return {basis_.data() + j * ambient_, ambient_};
  }

  /// Coefficients B^T x of a vector in this basis.
  std::vector<double> coefficients(std::span<const double> x) const;

  /// Orthogonal projection B B^T x.
  std::vector<double> project(std::span<const double> x) const;

 private:
  std::size_t ambient_;
  std::size_t p_;
  std::vector<double> basis_;  // column-major ambient_ x p_
};

/// Cyclic Jacobi eigendecomposition. Converges when the off-diagonal Frobenius
/// mass drops below 1e-12 * ||A||_HS; throws DegeneracyError carrying the
/// remaining residual after 100 sweeps.
EigenSystem symmetric_eigen(const SymmetricOperator& a);

/// P = B B^T, the orthogonal projector onto the subspace.
SymmetricOperator projection_matrix(const Subspace& v);

/// rho(V, W) = ||P_V - P_W||_HS, a metric on subspaces of a fixed ambient
/// space. Computed via rho^2 = dim V + dim W - 2 ||B^T C||_F^2.
double rho_distance(const Subspace& v, const Subspace& w);

}  // namespace fxpca
