#include "fxpca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fxpca {

namespace {

void check_dim(std::size_t dim) {
  if (dim < 1) throw DomainError("matrix dimension must be at least 1");
}

}  // namespace

SymmetricOperator::SymmetricOperator(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {
  check_dim(dim);
}

SymmetricOperator SymmetricOperator::from_row_major(std::size_t dim,
                                                    std::span<const double> data) {
  check_dim(dim);
  if (data.size() != dim * dim) throw DomainError("from_row_major: size mismatch");
  SymmetricOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double v = 0.5 * (data[i * dim + j] + data[j * dim + i]);
      out.a_[i * dim + j] = v;
      out.a_[j * dim + i] = v;
    }
  }
  return out;
}

SymmetricOperator SymmetricOperator::identity(std::size_t dim) {
  SymmetricOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.a_[i * dim + i] = 1.0;
  return out;
}

SymmetricOperator SymmetricOperator::diagonal(std::span<const double> entries) {
  SymmetricOperator out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out.a_[i * entries.size() + i] = entries[i];
  return out;
}

void SymmetricOperator::set(std::size_t i, std::size_t j, double value) {
  a_[i * dim_ + j] = value;
  a_[j * dim_ + i] = value;
}

void SymmetricOperator::add_scaled_outer(std::span<const double> v, double weight) {
  if (v.size() != dim_) throw DomainError("add_scaled_outer: vector length mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    const double wi = weight * v[i];
    a_[i * dim_ + i] += wi * v[i];
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double p = wi * v[j];
      a_[i * dim_ + j] += p;
      a_[j * dim_ + i] += p;
    }
  }
}

void SymmetricOperator::add_scaled(const SymmetricOperator& other, double factor) {
  if (other.dim_ != dim_) throw DomainError("add_scaled: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += factor * other.a_[i];
}

void SymmetricOperator::scale(double factor) {
  for (double& x : a_) x *= factor;
}

double SymmetricOperator::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

SymmetricOperator operator+(const SymmetricOperator& x, const SymmetricOperator& y) {
  SymmetricOperator out = x;
  out.add_scaled(y, 1.0);
  return out;
}

SymmetricOperator operator-(const SymmetricOperator& x, const SymmetricOperator& y) {
  SymmetricOperator out = x;
  out.add_scaled(y, -1.0);
  return out;
}

double hs_norm(const SymmetricOperator& a) {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

double hs_inner(const SymmetricOperator& a, const SymmetricOperator& b) {
  if (a.dim() != b.dim()) throw DomainError("hs_inner: dimension mismatch");
  double s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * db[i];
  return s;
}

EigenSystem::EigenSystem(std::vector<double> eigenvalues, std::vector<double> vectors_col_major,
                         std::size_t dim)
    : dim_(dim), eigenvalues_(std::move(eigenvalues)), vectors_(std::move(vectors_col_major)) {
  if (eigenvalues_.size() != dim_ || vectors_.size() != dim_ * dim_)
    throw DomainError("EigenSystem: inconsistent sizes");
}

namespace {

double off_diagonal_norm(const SymmetricOperator& a) {
  double s = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem symmetric_eigen(const SymmetricOperator& input) {
  const std::size_t d = input.dim();
  const double norm = hs_norm(input);
  const double tol = 1e-12 * norm;
  constexpr int kMaxSweeps = 100;

  // Work on a mutable row-major copy plus a column-major rotation accumulator.
  std::vector<double> a(input.data().begin(), input.data().end());
  std::vector<double> q(d * d, 0.0);  // column-major
  for (std::size_t i = 0; i < d; ++i) q[i * d + i] = 1.0;

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * d + j]; };

  int sweep = 0;
  double off = off_diagonal_norm(input);
  while (off > tol && sweep < kMaxSweeps) {
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t r = p + 1; r < d; ++r) {
        const double apr = at(p, r);
        if (apr == 0.0) continue;
        const double theta = (at(r, r) - at(p, p)) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apr;

        at(p, p) -= h;
        at(r, r) += h;
        at(p, r) = 0.0;
        at(r, p) = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          if (j == p || j == r) continue;
          const double ajp = at(j, p);
          const double ajr = at(j, r);
          at(j, p) = ajp - s * (ajr + tau * ajp);
          at(p, j) = at(j, p);
          at(j, r) = ajr + s * (ajp - tau * ajr);
          at(r, j) = at(j, r);
        }
        for (std::size_t j = 0; j < d; ++j) {
          const double qjp = q[p * d + j];
          const double qjr = q[r * d + j];
          q[p * d + j] = qjp - s * (qjr + tau * qjp);
          q[r * d + j] = qjr + s * (qjp - tau * qjr);
        }
      }
    }
    ++sweep;
    double s2 = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) s2 += at(i, j) * at(i, j);
    off = std::sqrt(2.0 * s2);
  }
  if (off > tol)
    throw DegeneracyError("eigendecomposition did not converge in 100 sweeps; off-diagonal "
                          "residual " + std::to_string(off), off);

  // Sort eigenpairs by descending eigenvalue, stable in the original order.
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t x, std::size_t y) { return at(x, x) > at(y, y); });

  std::vector<double> values(d);
  std::vector<double> vectors(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t src = perm[j];
    values[j] = at(src, src);
    // Sign convention: largest-magnitude entry positive, ties to lowest index.
    std::size_t arg = 0;
    double best = std::abs(q[src * d + 0]);
    for (std::size_t i = 1; i < d; ++i) {
      const double m = std::abs(q[src * d + i]);
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    const double sign = (q[src * d + arg] < 0.0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < d; ++i) vectors[j * d + i] = sign * q[src * d + i];
  }
  return EigenSystem(std::move(values), std::move(vectors), d);
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<double> basis_col_major)
    : ambient_(ambient_dim), p_(basis_col_major.size() / std::max<std::size_t>(ambient_dim, 1)),
      basis_(std::move(basis_col_major)) {
  check_dim(ambient_);
  if (p_ < 1 || basis_.size() != ambient_ * p_)
    throw DomainError("Subspace: basis size must be a positive multiple of the ambient dim");
  if (p_ > ambient_) throw DomainError("Subspace: more columns than ambient dimensions");
  for (std::size_t i = 0; i < p_; ++i) {
    for (std::size_t j = i; j < p_; ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < ambient_; ++r)
        dot += basis_[i * ambient_ + r] * basis_[j * ambient_ + r];
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - want) > 1e-8)
        throw DomainError("Subspace: basis columns are not orthonormal");
    }
  }
}

Subspace Subspace::from_curves(const std::vector<std::vector<double>>& curves,
                               double grid_weight) {
  if (curves.empty()) throw DomainError("from_curves: no curves given");
  if (grid_weight <= 0.0) throw DomainError("from_curves: grid weight must be positive");
  const std::size_t d = curves.front().size();
  const double sw = std::sqrt(grid_weight);
  std::vector<double> basis;
  basis.reserve(curves.size() * d);
  for (const auto& c : curves) {
    if (c.size() != d) throw DomainError("from_curves: curves on different grids");
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = sw * c[i];
    // Modified Gram-Schmidt against the columns accepted so far, twice for
    // numerical orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t jcol = 0; jcol * d < basis.size(); ++jcol) {
        double dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += basis[jcol * d + i] * v[i];
        for (std::size_t i = 0; i < d; ++i) v[i] -= dot * basis[jcol * d + i];
      }
    }
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw DegeneracyError("from_curves: curves are linearly dependent");
    for (double x : v) basis.push_back(x / nrm);
  }
  return Subspace(d, std::move(basis));
}

Subspace Subspace::leading(const EigenSystem& es, std::size_t p) {
  if (p < 1 || p > es.dim()) throw DomainError("leading: p out of range");
  std::vector<double> basis(es.dim() * p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto col = es.eigenvector(j);
    std::copy(col.begin(), col.end(), basis.begin() + j * es.dim());
  }
  return Subspace(es.dim(), std::move(basis));
}

std::vector<double> Subspace::coefficients(std::span<const double> x) const {
  if (x.size() != ambient_) throw DomainError("coefficients: vector length mismatch");
  std::vector<double> out(p_, 0.0);
  for (std::size_t j = 0; j < p_; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < ambient_; ++i) dot += basis_[j * ambient_ + i] * x[i];
    out[j] = dot;
  }
  return out;
}

std::vector<double> Subspace::project(std::span<const double> x) const {
  const auto coef = coefficients(x);
  std::vector<double> out(ambient_, 0.0);
  for (std::size_t j = 0; j < p_; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) out[i] += coef[j] * basis_[j * ambient_ + i];
  return out;
}

SymmetricOperator projection_matrix(const Subspace& v) {
  SymmetricOperator p(v.ambient_dim());
  for (std::size_t j = 0; j < v.dim(); ++j) p.add_scaled_outer(v.basis_column(j), 1.0);
  return p;
}

double rho_distance(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw DomainError("rho_distance: ambient dimension mismatch");
  // Direct definition: the entrywise projector difference cancels exactly for
  // equal subspaces and is exactly antisymmetric in (V, W), so the distance is
  // a true metric down to rounding.
  return hs_norm(projection_matrix(v) - projection_matrix(w));
}

}  // namespace fxpca
