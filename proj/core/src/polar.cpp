#include "fxpca/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fxpca {

void FunctionalSample::validate() const {
  if (n < 1 || d < 1) throw DomainError("sample must have n >= 1 and d >= 1");
  if (!(grid_weight > 0.0)) throw DomainError("grid weight must be positive");
  if (values.size() != n * d) throw DomainError("value buffer does not match n x d");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw DataError("non-finite value at row " + std::to_string(i / d + 1) + ", column " +
                      std::to_string(i % d + 1));
}

std::size_t PolarSample::nonzero_count() const {
  std::size_t c = 0;
  for (double r : radii)
    if (r > 0.0) ++c;
  return c;
}

double l2_inner(std::span<const double> f, std::span<const double> g, double grid_weight) {
  if (f.size() != g.size()) throw DomainError("l2_inner: curve length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return grid_weight * s;
}

double l2_norm(std::span<const double> f, double grid_weight) {
  return std::sqrt(l2_inner(f, f, grid_weight));
}

PolarSample polar_decompose(const FunctionalSample& sample) {
  sample.validate();
  PolarSample out;
  out.n = sample.n;
  out.d = sample.d;
  out.grid_weight = sample.grid_weight;
  out.radii.resize(sample.n);
  out.angles.assign(sample.n * sample.d, 0.0);
  for (std::size_t i = 0; i < sample.n; ++i) {
    const auto x = sample.row(i);
    const double r = l2_norm(x, sample.grid_weight);
    out.radii[i] = r;
    if (r > 0.0) {
      const double inv = 1.0 / r;
      for (std::size_t j = 0; j < sample.d; ++j) out.angles[i * sample.d + j] = inv * x[j];
    }
  }
  out.order.resize(sample.n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
    return out.radii[a] > out.radii[b];
  });
  return out;
}

ExtremeSelection select_extremes(const PolarSample& polar, std::size_t k) {
  if (k < 1 || k > polar.n)
    throw DomainError("select_extremes: k must satisfy 1 <= k <= n (got k=" +
                      std::to_string(k) + ", n=" + std::to_string(polar.n) + ")");
  ExtremeSelection sel;
  sel.indices.assign(polar.order.begin(), polar.order.begin() + k);
  sel.threshold = polar.radii[sel.indices.back()];
  if (!(sel.threshold > 0.0))
    throw DomainError("select_extremes: fewer than k observations with positive radius");
  return sel;
}

FunctionalSample sqrt_transform(const FunctionalSample& sample) {
  sample.validate();
  FunctionalSample out = sample;
  for (std::size_t i = 0; i < sample.n; ++i) {
    for (std::size_t j = 0; j < sample.d; ++j) {
      const double v = sample.values[i * sample.d + j];
      if (v < 0.0)
        throw DataError("sqrt transform: negative value at row " + std::to_string(i + 1) +
                        ", column " + std::to_string(j + 1));
      out.values[i * sample.d + j] = std::sqrt(v);
    }
  }
  return out;
}

}  // namespace fxpca
