#include "fxpca/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fxpca {

namespace {

// Acklam-style rational approximation of the inverse standard normal CDF,
// refined by one Halley step; absolute error well below 1e-12.
double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

// Top k+1 radii in nonincreasing order.
std::vector<double> top_radii(std::span<const double> radii, std::size_t count) {
  std::vector<double> sorted(radii.begin(), radii.end());
  std::partial_sort(sorted.begin(), sorted.begin() + count, sorted.end(),
                    [](double a, double b) { return a > b; });
  sorted.resize(count);
  return sorted;
}

}  // namespace

double normal_critical_value(double ci_level) {
  if (!(ci_level > 0.0) || !(ci_level < 1.0))
    throw DomainError("confidence level must lie in (0,1)");
  if (ci_level == 0.90) return 1.645;
  if (ci_level == 0.95) return 1.96;
  if (ci_level == 0.99) return 2.576;
  return inverse_normal_cdf(0.5 * (1.0 + ci_level));
}

HillResult hill(std::span<const double> radii, std::size_t k, double ci_level) {
  const std::size_t n = radii.size();
  if (k < 1 || k + 1 > n)
    throw DomainError("hill: require 1 <= k and k+1 <= n (got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  const double z = normal_critical_value(ci_level);
  const std::vector<double> top = top_radii(radii, k + 1);
  if (!(top.back() > 0.0))
    throw DataError("hill: nonpositive radius among the top k+1 order statistics");
  const double log_ref = std::log(top[k]);
  double gamma = 0.0;
  for (std::size_t i = 0; i < k; ++i) gamma += std::log(top[i]) - log_ref;
  gamma /= static_cast<double>(k);
  if (gamma <= 0.0)
    throw DegeneracyError("hill: zero log-spacings (constant top radii), gamma degenerate");

  const double half_width = z / std::sqrt(static_cast<double>(k));
  HillResult out;
  out.k = k;
  out.gamma_hat = gamma;
  out.alpha_hat = 1.0 / gamma;
  out.ci_level = ci_level;
  // CI on gamma is gamma_hat * (1 -+ half_width); inverting flips the order.
  out.alpha_ci_low = out.alpha_hat / (1.0 + half_width);
  out.alpha_ci_high = (half_width < 1.0)
                          ? out.alpha_hat / (1.0 - half_width)
                          : std::numeric_limits<double>::infinity();
  return out;
}

std::vector<HillResult> hill_plot(std::span<const double> radii, std::size_t k_min,
                                  std::size_t k_max, double ci_level) {
  if (k_min < 1 || k_min > k_max) throw DomainError("hill_plot: bad k range");
  std::vector<HillResult> out;
  out.reserve(k_max - k_min + 1);
  for (std::size_t k = k_min; k <= k_max; ++k) out.push_back(hill(radii, k, ci_level));
  return out;
}

ParetoQq pareto_qq(std::span<const double> radii, std::size_t k) {
  const std::size_t n = radii.size();
  if (k < 1 || k > n) throw DomainError("pareto_qq: require 1 <= k <= n");
  const std::vector<double> top = top_radii(radii, k);
  if (!(top.back() > 0.0)) throw DataError("pareto_qq: nonpositive radius among the top k");

  ParetoQq out;
  out.points.resize(k);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double x = -std::log(static_cast<double>(i + 1) / static_cast<double>(n + 1));
    const double y = std::log(top[i]);
    out.points[i] = ParetoQqPoint{i + 1, x, y};
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double kk = static_cast<double>(k);
  const double var = sxx - sx * sx / kk;
  out.slope = (k > 1 && var > 0.0) ? (sxy - sx * sy / kk) / var : 0.0;
  out.intercept = (sy - out.slope * sx) / kk;
  out.degenerate = top.front() == top.back();
  if (out.degenerate) out.slope = 0.0;
  return out;
}

std::vector<MomentSeriesPoint> moment_stability(const PolarSample& polar,
                                                std::span<const double> h, std::size_t k_min,
                                                std::size_t k_max) {
  if (h.size() != polar.d) throw DomainError("moment_stability: test curve grid mismatch");
  if (k_min < 1 || k_min > k_max) throw DomainError("moment_stability: bad k range");
  if (k_max > polar.nonzero_count())
    throw DomainError("moment_stability: k range exceeds the nonzero radii");
  std::vector<MomentSeriesPoint> out;
  out.reserve(k_max - k_min + 1);
  double running = 0.0;
  for (std::size_t i = 0; i < k_max; ++i) {
    const std::size_t row = polar.order[i];
    running += std::abs(l2_inner(polar.angle(row), h, polar.grid_weight));
    const std::size_t k = i + 1;
    if (k >= k_min) out.push_back({k, running / static_cast<double>(k)});
  }
  return out;
}

std::vector<std::vector<double>> default_test_functions(std::size_t d) {
  if (d < 2) throw DomainError("test functions: grid too small");
  std::vector<std::vector<double>> out;
  out.reserve(6);
  for (int j : kTestFunctionFrequencies) {
    std::vector<double> h(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(d);
      h[i] = std::sin(2.0 * std::numbers::pi * j * x);
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace fxpca
