#pragma once

// Test-side oracles, independent of the library's computation paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "fxpca/linalg.hpp"
#include "fxpca/rng.hpp"

namespace oracle {

// Roots of the characteristic polynomial of a symmetric matrix, d <= 3,
// via the closed-form quadratic/trigonometric-cubic formulas. Returned
// nonincreasing.
inline std::vector<double> char_poly_eigenvalues(const fxpca::SymmetricOperator& a) {
  const std::size_t d = a.dim();
  std::vector<double> roots;
  if (d == 1) {
    roots = {a(0, 0)};
  } else if (d == 2) {
    const double tr = a(0, 0) + a(1, 1);
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    roots = {tr / 2.0 + disc, tr / 2.0 - disc};
  } else if (d == 3) {
    // Eigenvalues of a symmetric 3x3 by the trigonometric method on the
    // shifted matrix B = (A - q I)/p.
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    double p2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const double v = a(i, j) - (i == j ? q : 0.0);
        p2 += v * v;
      }
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) {
      roots = {q, q, q};
    } else {
      double detb = 0.0;
      auto b = [&](std::size_t i, std::size_t j) {
        return (a(i, j) - (i == j ? q : 0.0)) / p;
      };
      detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
             b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
             b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
      const double r = std::clamp(detb / 2.0, -1.0, 1.0);
      const double phi = std::acos(r) / 3.0;
      const double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
      roots = {q + 2.0 * p * std::cos(phi), q + 2.0 * p * std::cos(phi - two_pi_3),
               q + 2.0 * p * std::cos(phi - 2.0 * two_pi_3)};
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// Random symmetric matrix with entries uniform in [-1, 1].
inline fxpca::SymmetricOperator random_symmetric(std::size_t d, fxpca::CounterRng& rng) {
  fxpca::SymmetricOperator a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) a.set(i, j, 2.0 * rng.next_uniform() - 1.0);
  return a;
}

// Random p-dimensional subspace of R^d from Gram-Schmidt on Gaussian columns.
inline fxpca::Subspace random_subspace(std::size_t d, std::size_t p, fxpca::CounterRng& rng) {
  std::vector<std::vector<double>> cols(p, std::vector<double>(d));
  for (auto& c : cols)
    for (double& v : c) v = rng.next_normal(1.0);
  return fxpca::Subspace::from_curves(cols, 1.0);
}

// P[Binomial(n, p) <= s], exact summation in log space.
inline double binomial_cdf(std::size_t n, double p, std::size_t s) {
  double cdf = 0.0;
  double log_pmf = static_cast<double>(n) * std::log1p(-p);  // P[X = 0]
  for (std::size_t x = 0;; ++x) {
    cdf += std::exp(log_pmf);
    if (x >= s) break;
    log_pmf += std::log(static_cast<double>(n - x)) - std::log(static_cast<double>(x + 1)) +
               std::log(p) - std::log1p(-p);
  }
  return std::min(cdf, 1.0);
}

// Largest s such that P[Binomial(n,p) <= s] <= level (one-sided lower
// critical value); a success count at or below it rejects coverage >= p.
inline std::size_t binomial_lower_critical(std::size_t n, double p, double level) {
  std::size_t s = 0;
  double cdf = 0.0;
  double log_pmf = static_cast<double>(n) * std::log1p(-p);
  for (std::size_t x = 0; x <= n; ++x) {
    cdf += std::exp(log_pmf);
    if (cdf > level) return x == 0 ? 0 : x - 1;
    s = x;
    log_pmf += std::log(static_cast<double>(n - x)) - std::log(static_cast<double>(x + 1)) +
               std::log(p) - std::log1p(-p);
  }
  return s;
}

// Exact E[ 1{I > d_cut} | R >= t ] for the harmonic-weight mixture (w = 1)
// with R ~ Pareto(alpha): summation over the law of floor(R) plus an integral
// tail correction beyond m = M.
inline double mixture_escape_expectation(double t, std::size_t d_cut, double alpha = 1.0,
                                         std::size_t cap = 20'000'000) {
  auto harmonic = [](std::size_t m) {
    double h = 0.0;
    for (std::size_t i = 1; i <= m; ++i) h += 1.0 / static_cast<double>(i);
    return h;
  };
  const double h_cut = harmonic(d_cut);
  const std::size_t m0 = static_cast<std::size_t>(std::floor(t));
  double h_run = harmonic(m0);
  double total = 0.0;
  std::size_t m = m0;
  while (m < cap) {
    const double lo = std::max(static_cast<double>(m), t);
    const double plm = std::pow(t / lo, alpha) - std::pow(t / static_cast<double>(m + 1), alpha);
    if (m > d_cut) total += plm * (1.0 - h_cut / h_run);
    ++m;
    h_run += 1.0 / static_cast<double>(m);
  }
  // Tail beyond the cap: harmonic number ~ log r + gamma.
  const double gamma = 0.5772156649015329;
  const double a = std::log(static_cast<double>(cap)) + gamma;
  const double tail = std::pow(t / static_cast<double>(cap), alpha) *
                      (1.0 - h_cut / a * (1.0 - 1.0 / a + 2.0 / (a * a)));
  return total + tail;
}

}  // namespace oracle
