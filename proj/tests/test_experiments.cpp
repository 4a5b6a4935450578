#include <doctest.h>

#include <cmath>

#include "fxpca/experiments.hpp"
#include "fxpca/rng.hpp"
#include "fxpca/simulate.hpp"

using namespace fxpca;

namespace {

// Sample of unit-ish curves supported on span(e1, e2) with distinct weights,
// plus optional small off-plane noise.
PolarSample planar_sample(std::size_t n, std::size_t d, double noise, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  FunctionalSample s;
  s.n = n;
  s.d = d;
  s.grid_weight = 1.0;
  s.values.assign(n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = rng.next_normal(3.0);
    const double b = rng.next_normal(1.0);
    s.values[i * d + 0] = a;
    s.values[i * d + 1] = b;
    for (std::size_t j = 2; j < d; ++j) s.values[i * d + j] = noise * rng.next_normal(1.0);
  }
  return polar_decompose(s);
}

}  // namespace

TEST_CASE("scree_comparison: planar data has exactly two nonzero extreme eigenvalues") {
  const auto polar = planar_sample(300, 6, 0.0, 41);
  const auto cmp = scree_comparison(polar, 60);
  REQUIRE(cmp.extreme.size() == 6);
  for (std::size_t j = 2; j < 6; ++j) CHECK(std::abs(cmp.extreme[j]) < 1e-10);
  double sum = 0.0;
  for (double v : cmp.extreme) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("scree_comparison with k=n collapses to one series") {
  const auto polar = planar_sample(100, 5, 0.3, 42);
  const auto cmp = scree_comparison(polar, 100);
  for (std::size_t j = 0; j < 5; ++j)
    CHECK(cmp.extreme[j] == doctest::Approx(cmp.full[j]).epsilon(1e-12));
}

TEST_CASE("eigenfunction_recovery on exactly contained data") {
  const auto polar = planar_sample(400, 6, 0.0, 43);
  const Subspace target = Subspace::from_curves(
      {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}, 1.0);
  CHECK(eigenfunction_recovery(polar, 80, 2, target) <= 1e-6);
}

TEST_CASE("eigenfunction_recovery against the full space measures dimension mismatch") {
  const std::size_t d = 5, p = 2;
  const auto polar = planar_sample(200, d, 0.5, 44);
  std::vector<std::vector<double>> full(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) full[j][j] = 1.0;
  const Subspace target = Subspace::from_curves(full, 1.0);
  const double rho = eigenfunction_recovery(polar, 50, p, target);
  CHECK(rho * rho == doctest::Approx(static_cast<double>(d - p)).epsilon(1e-9));
}

TEST_CASE("reconstruction_cv on planar angles gives zero error everywhere") {
  const auto polar = planar_sample(500, 6, 0.0, 45);
  CvConfig cfg;
  cfg.k = 100;
  cfg.p = 2;
  cfg.v = 20;
  cfg.reps = 10;
  cfg.mode = CvMode::RandomCv;
  cfg.seed = 4242;
  const CvResult res = reconstruction_cv(polar, cfg);
  for (const auto& variant : res.errors)
    for (double e : variant) CHECK(e <= 1e-10);
}

TEST_CASE("reconstruction_cv errors live in [0,1] and respect config domains") {
  const auto polar = planar_sample(400, 8, 0.4, 46);
  CvConfig cfg;
  cfg.k = 80;
  cfg.p = 2;
  cfg.v = 20;
  cfg.reps = 40;
  cfg.mode = CvMode::TailHoldout;
  cfg.seed = 99;
  const CvResult res = reconstruction_cv(polar, cfg);
  for (const auto& variant : res.errors) {
    REQUIRE(variant.size() == cfg.reps);
    for (double e : variant) {
      CHECK(e >= 0.0);
      CHECK(e <= 1.0 + 1e-12);
    }
  }
  // Tail holdout fixes the validation set: variants 0 and 1 are deterministic
  // across replications.
  for (std::size_t r = 1; r < cfg.reps; ++r) {
    CHECK(res.errors[0][r] == doctest::Approx(res.errors[0][0]).epsilon(1e-15));
    CHECK(res.errors[1][r] == doctest::Approx(res.errors[1][0]).epsilon(1e-15));
  }

  CvConfig bad = cfg;
  bad.v = 80;
  CHECK_THROWS_AS(reconstruction_cv(polar, bad), DomainError);
  bad = cfg;
  bad.k = 1000;
  CHECK_THROWS_AS(reconstruction_cv(polar, bad), DomainError);
  bad = cfg;
  bad.reps = 0;
  CHECK_THROWS_AS(reconstruction_cv(polar, bad), DomainError);
}

TEST_CASE("in-sample error lower-bounds held-out error on average") {
  // Variant 0 trained on the extreme training set: its error on the training
  // set itself is optimistic compared to the held-out validation error.
  const auto polar = planar_sample(600, 6, 0.6, 47);
  CvConfig cfg;
  cfg.k = 120;
  cfg.p = 2;
  cfg.v = 30;
  cfg.reps = 60;
  cfg.mode = CvMode::RandomCv;
  cfg.seed = 7;
  const CvResult res = reconstruction_cv(polar, cfg);
  double held_out = 0.0, held_out2 = 0.0;
  for (double e : res.errors[0]) {
    held_out += e;
    held_out2 += e * e;
  }
  held_out /= cfg.reps;
  held_out2 = held_out2 / cfg.reps - held_out * held_out;
  const double se = std::sqrt(std::max(held_out2, 0.0) / cfg.reps);

  // In-sample counterpart: train and evaluate on the full top-k set.
  const auto cov = empirical_extreme_cov(polar, cfg.k);
  const auto lead = leading_subspace(cov, cfg.p);
  const auto sel = select_extremes(polar, cfg.k);
  const double in_sample = reconstruction_error(polar, sel.indices, lead.subspace);
  CHECK(in_sample <= held_out + 3.0 * se);
}

TEST_CASE("random-cv means stabilize across disjoint seed blocks") {
  const auto polar = planar_sample(800, 6, 0.5, 48);
  CvConfig cfg;
  cfg.k = 160;
  cfg.p = 2;
  cfg.v = 40;
  cfg.reps = 150;
  cfg.mode = CvMode::RandomCv;
  cfg.seed = 1001;
  const CvResult a = reconstruction_cv(polar, cfg);
  cfg.seed = 2002;
  const CvResult b = reconstruction_cv(polar, cfg);
  auto mean_sd = [&](const std::vector<double>& xs) {
    double m = 0.0, m2 = 0.0;
    for (double x : xs) {
      m += x;
      m2 += x * x;
    }
    m /= xs.size();
    m2 = m2 / xs.size() - m * m;
    return std::pair{m, std::sqrt(std::max(m2, 0.0) / xs.size())};
  };
  const auto [ma, sa] = mean_sd(a.errors[0]);
  const auto [mb, sb] = mean_sd(b.errors[0]);
  CHECK(std::abs(ma - mb) <= 3.0 * std::sqrt(sa * sa + sb * sb) + 1e-9);
}

TEST_CASE("bias-variance orderings on the six-factor model") {
  // Training on extremes beats the size-matched bulk subsample, and the large
  // bulk training set beats the size-matched one (training-size effect). The
  // remaining pairing depends on the data and is only reported upstream.
  const auto polar =
      polar_decompose(sample_multiplicative(six_factor_sine_model(24), 4000, 314));
  CvConfig cfg;
  cfg.k = 80;
  cfg.p = 2;
  cfg.v = 20;
  cfg.reps = 100;
  cfg.mode = CvMode::RandomCv;
  cfg.seed = 2718;
  const CvResult res = reconstruction_cv(polar, cfg);
  const double med_extreme = five_number_summary(res.errors[0]).median;
  const double med_full = five_number_summary(res.errors[1]).median;
  const double med_sub = five_number_summary(res.errors[2]).median;
  CHECK(med_extreme < med_sub);
  CHECK(med_full < med_sub);
}

TEST_CASE("five_number_summary quartiles") {
  const std::vector<double> xs{4, 1, 3, 2, 5};
  const FiveNumber f = five_number_summary(xs);
  CHECK(f.min == 1);
  CHECK(f.q1 == 2);
  CHECK(f.median == 3);
  CHECK(f.q3 == 4);
  CHECK(f.max == 5);
  CHECK_THROWS_AS(five_number_summary(std::vector<double>{}), DomainError);
}
