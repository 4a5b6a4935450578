#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxpca/polar.hpp"

namespace fxpca {

/// Hill estimate of gamma = 1/alpha from the top k+1 order statistics, with a
/// symmetric normal confidence interval on gamma, gamma_hat * (1 +- z/sqrt(k)),
/// inverted for alpha.
struct HillResult {
  std::size_t k = 0;
  double gamma_hat = 0.0;
  double alpha_hat = 0.0;
  double ci_level = 0.95;
  double alpha_ci_low = 0.0;
  double alpha_ci_high = 0.0;
};

/// Two-sided normal critical value for the given confidence level. The
/// classical two-decimal conventions 1.645 / 1.96 / 2.576 are used for the
/// 90/95/99% levels; other levels fall back to the exact inverse normal.
double normal_critical_value(double ci_level);

/// gamma_hat = (1/k) sum_{i<=k} log(R_(i) / R_(k+1)). Requires k+1 <= n and
/// positive top-(k+1) radii; all-equal top radii raise DegeneracyError.
HillResult hill(std::span<const double> radii, std::size_t k, double ci_level = 0.95);

/// One HillResult per k in [k_min, k_max].
std::vector<HillResult> hill_plot(std::span<const double> radii, std::size_t k_min,
                                  std::size_t k_max, double ci_level = 0.95);

struct ParetoQqPoint {
  std::size_t rank = 0;        // i = 1 for the largest radius
  double theoretical = 0.0;    // -log(i / (n+1))
  double log_radius = 0.0;
};

struct ParetoQq {
  std::vector<ParetoQqPoint> points;
  double slope = 0.0;      // least-squares estimate of gamma
  double intercept = 0.0;
  bool degenerate = false;  // all radii equal
};

/// QQ plot of the top k log radii against exponential plotting positions,
/// plus the OLS slope.
ParetoQq pareto_qq(std::span<const double> radii, std::size_t k);

struct MomentSeriesPoint {
  std::size_t k = 0;
  double value = 0.0;
};

/// Running conditional first moment (1/k) sum_{i<=k} |<Theta_(i), h>| for k in
/// [k_min, k_max]. Requires h on the sample grid and k_max within the count of
/// nonzero radii.
std::vector<MomentSeriesPoint> moment_stability(const PolarSample& polar,
                                                std::span<const double> h, std::size_t k_min,
                                                std::size_t k_max);

/// The six projection test curves sin(2 pi j x), j in {1,2,3,4,6,8}, sampled
/// at grid midpoints (i + 0.5)/d.
std::vector<std::vector<double>> default_test_functions(std::size_t d);
constexpr int kTestFunctionFrequencies[6] = {1, 2, 3, 4, 6, 8};

}  // namespace fxpca
