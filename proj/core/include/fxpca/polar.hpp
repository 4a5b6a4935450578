#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxpca/errors.hpp"

namespace fxpca {

/// n discretized curves on a common grid of d points. grid_weight is the
/// quadrature weight per point (1 by default, 1/d for true Riemann scaling),
/// so <f,g> = grid_weight * sum f_j g_j.
struct FunctionalSample {
  std::size_t n = 0;
  std::size_t d = 0;
  double grid_weight = 1.0;
  std::vector<double> values;  // row-major n x d

  std::span<const double> row(std::size_t i) const { return {values.data() + i * d, d}; }
  std::span<double> row(std::size_t i) { return {values.data() + i * d, d}; }

  /// Throws DomainError / DataError when the invariants fail (n,d >= 1,
  /// positive weight, finite entries).
  void validate() const;
};

/// Radii and unit-norm angles of a sample, with the permutation sorting radii
/// nonincreasing (ties broken by original index ascending). Zero-norm rows
/// keep radius 0 and an undefined angle; they sort last and are never
/// selectable as extremes.
struct PolarSample {
  std::size_t n = 0;
  std::size_t d = 0;
  double grid_weight = 1.0;
  std::vector<double> radii;
  std::vector<double> angles;        // row-major; zero rows are all-zero
  std::vector<std::size_t> order;    // radii[order[0]] >= radii[order[1]] >= ...

  std::span<const double> angle(std::size_t i) const { return {angles.data() + i * d, d}; }
  bool angle_defined(std::size_t i) const { return radii[i] > 0.0; }
  std::size_t nonzero_count() const;
};

/// Discretized L2 inner product: grid_weight * sum f_j g_j.
double l2_inner(std::span<const double> f, std::span<const double> g, double grid_weight);
double l2_norm(std::span<const double> f, double grid_weight);

PolarSample polar_decompose(const FunctionalSample& sample);

struct ExtremeSelection {
  std::vector<std::size_t> indices;  // exactly k of them, most extreme first
  double threshold = 0.0;            // R_(k), the k-th largest radius
};

/// Indices of the k largest radii plus the empirical threshold R_(k).
/// Requires 1 <= k <= n and strictly fewer than k zero radii.
ExtremeSelection select_extremes(const PolarSample& polar, std::size_t k);

/// Entrywise square root; a negative entry raises DataError naming the
/// (1-based) row and column.
FunctionalSample sqrt_transform(const FunctionalSample& sample);

}  // namespace fxpca
