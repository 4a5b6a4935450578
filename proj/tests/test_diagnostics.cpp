#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fxpca/diagnostics.hpp"
#include "fxpca/rng.hpp"
#include "fxpca/simulate.hpp"

using namespace fxpca;

TEST_CASE("hill hand example: radii (8,4,2,1), k=2") {
  const std::vector<double> radii{8, 4, 2, 1};
  const HillResult h = hill(radii, 2);
  CHECK(h.gamma_hat == doctest::Approx(1.0397207708399179).epsilon(1e-12));
  CHECK(h.alpha_hat == doctest::Approx(1.0 / 1.0397207708399179).epsilon(1e-12));
  CHECK(h.alpha_ci_low < h.alpha_hat);
  CHECK(h.alpha_hat < h.alpha_ci_high);
}

TEST_CASE("hill scale invariance") {
  CounterRng rng(61, 0);
  std::vector<double> radii(500);
  for (double& r : radii) r = rng.next_pareto(2.0);
  const HillResult base = hill(radii, 50);
  for (const double c : {0.001, 7.5, 1e6}) {
    std::vector<double> scaled = radii;
    for (double& r : scaled) r *= c;
    const HillResult h = hill(scaled, 50);
    CHECK(h.gamma_hat == doctest::Approx(base.gamma_hat).epsilon(1e-12));
  }
}

TEST_CASE("hill errors and degeneracy") {
  const std::vector<double> radii{8, 4, 2, 1};
  CHECK_THROWS_AS(hill(radii, 0), DomainError);
  CHECK_THROWS_AS(hill(radii, 4), DomainError);  // needs k+1 <= n
  const std::vector<double> with_zero{8, 4, 0, 0};
  CHECK_THROWS_AS(hill(with_zero, 2), DataError);
  const std::vector<double> constant{3, 3, 3, 3};
  CHECK_THROWS_AS(hill(constant, 2), DegeneracyError);
}

TEST_CASE("hill is unbiased for gamma on exact Pareto samples") {
  // 2000 replications, n=10^4, k=500: the mean of gamma_hat sits within
  // 3 standard errors of 1/alpha.
  const double alpha = 2.0;
  const std::size_t reps = 2000, n = 10000, k = 500;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    CounterRng rng(62, rep);
    std::vector<double> radii(n);
    for (double& r : radii) r = rng.next_pareto(alpha);
    const double g = hill(radii, k).gamma_hat;
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / reps;
  const double var = sum2 / reps - mean * mean;
  const double se = std::sqrt(var / reps);
  CHECK(std::abs(mean - 1.0 / alpha) <= 3.0 * se);
}

TEST_CASE("hill coverage across k on a synthetic Pareto sample") {
  CounterRng rng(63, 0);
  std::vector<double> radii(10000);
  for (double& r : radii) r = rng.next_pareto(2.0);
  const auto series = hill_plot(radii, 50, 500);
  std::size_t covered = 0;
  for (const auto& h : series)
    if (h.alpha_ci_low <= 2.0 && 2.0 <= h.alpha_ci_high) ++covered;
  CHECK(static_cast<double>(covered) / series.size() >= 0.9);
  CHECK(series.front().k == 50);
  CHECK(series.back().k == 500);

  const auto single = hill_plot(radii, 100, 100);
  CHECK(single.size() == 1);
}

TEST_CASE("pareto_qq slope on exact Pareto quantiles") {
  // Plug in the exact quantile sequence R_(i) = (i/(n+1))^(-1/alpha): the plot
  // is exactly linear with slope 1/alpha.
  const double alpha = 2.5;
  const std::size_t n = 400;
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i)
    radii[i] = std::pow(static_cast<double>(i + 1) / (n + 1), -1.0 / alpha);
  const ParetoQq qq = pareto_qq(radii, 200);
  CHECK(qq.slope == doctest::Approx(1.0 / alpha).epsilon(1e-6));
  CHECK_FALSE(qq.degenerate);

  // Scaling shifts the intercept, not the slope.
  std::vector<double> scaled = radii;
  for (double& r : scaled) r *= 13.0;
  const ParetoQq qq2 = pareto_qq(scaled, 200);
  CHECK(qq2.slope == doctest::Approx(qq.slope).epsilon(1e-12));
  CHECK(qq2.intercept == doctest::Approx(qq.intercept + std::log(13.0)).epsilon(1e-9));
}

TEST_CASE("pareto_qq degenerate input") {
  const std::vector<double> constant{2, 2, 2, 2};
  const ParetoQq qq = pareto_qq(constant, 3);
  CHECK(qq.degenerate);
  CHECK(qq.slope == 0.0);
}

TEST_CASE("pareto_qq slope and hill agree on Pareto samples") {
  CounterRng rng(64, 0);
  std::vector<double> radii(5000);
  for (double& r : radii) r = rng.next_pareto(1.5);
  const double g_hill = hill(radii, 300).gamma_hat;
  const double g_qq = pareto_qq(radii, 300).slope;
  CHECK(std::abs(g_qq - g_hill) / g_hill < 0.1);
}

TEST_CASE("moment_stability constants and bounds") {
  FunctionalSample s;
  s.n = 5;
  s.d = 3;
  s.grid_weight = 1.0;
  s.values = {3, 0, 0, 2, 0, 0, 5, 0, 0, 1, 0, 0, 4, 0, 0};
  const auto polar = polar_decompose(s);

  const std::vector<double> e1{1, 0, 0};
  const auto series = moment_stability(polar, e1, 1, 5);
  REQUIRE(series.size() == 5);
  for (const auto& pt : series) CHECK(pt.value == doctest::Approx(1.0));

  const std::vector<double> e2{0, 1, 0};
  for (const auto& pt : moment_stability(polar, e2, 1, 5))
    CHECK(pt.value == doctest::Approx(0.0));

  const std::vector<double> wrong{1, 0};
  CHECK_THROWS_AS(moment_stability(polar, wrong, 1, 5), DomainError);
  CHECK_THROWS_AS(moment_stability(polar, e1, 1, 6), DomainError);

  // Cauchy-Schwarz: values within [0, ||h||].
  CounterRng rng(65, 0);
  FunctionalSample rs;
  rs.n = 50;
  rs.d = 4;
  rs.grid_weight = 0.25;
  rs.values.resize(200);
  for (double& v : rs.values) v = rng.next_normal(1.0);
  const auto rpolar = polar_decompose(rs);
  std::vector<double> h{1.0, -2.0, 0.5, 3.0};
  const double hnorm = l2_norm(h, 0.25);
  for (const auto& pt : moment_stability(rpolar, h, 1, 50)) {
    CHECK(pt.value >= 0.0);
    CHECK(pt.value <= hnorm + 1e-12);
  }
}

TEST_CASE("moment_stability on the square mixture approaches 6/pi^2 for h = e1") {
  MixtureModel m;
  m.alpha = 1.0;
  m.weight_exponent = 2;
  m.d_trunc = 24;
  const auto draws = sample_mixture(m, 200000, 19);
  const auto polar = polar_decompose(draws.sample);
  std::vector<double> e1(m.d_trunc, 0.0);
  e1[0] = 1.0;
  const auto series = moment_stability(polar, e1, 400, 800);
  const double limit = 0.6079271018540267;
  for (const auto& pt : series) {
    const double se = std::sqrt(limit * (1 - limit) / static_cast<double>(pt.k));
    CHECK(std::abs(pt.value - limit) <= 5.0 * se);
  }
}

TEST_CASE("default test functions: frequencies, norms, orthogonality") {
  const std::size_t d = 48;
  const auto hs = default_test_functions(d);
  REQUIRE(hs.size() == 6);
  // sin(2 pi j x) at x = 0.25 equals 1 for j = 1.
  CHECK(std::sin(2.0 * std::numbers::pi * 1 * 0.25) == doctest::Approx(1.0));
  for (const auto& h : hs) {
    double sq = 0.0;
    for (double v : h) sq += v * v;
    CHECK(sq == doctest::Approx(static_cast<double>(d) / 2.0).epsilon(1e-10));
  }
  // j=2 and j=4 are discretely orthogonal for d a multiple of 8.
  const auto& h2 = hs[1];
  const auto& h4 = hs[3];
  CHECK(std::abs(l2_inner(h2, h4, 1.0)) < 1e-10);
}
