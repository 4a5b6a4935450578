#include "fxpca/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "fxpca/parallel.hpp"
#include "fxpca/rng.hpp"

namespace fxpca {

ScreeComparison scree_comparison(const PolarSample& polar, std::size_t k) {
  ScreeComparison out;
  out.extreme = scree(empirical_extreme_cov(polar, k));
  out.full = scree(empirical_full_cov(polar));
  return out;
}

double eigenfunction_recovery(const PolarSample& polar, std::size_t k, std::size_t p,
                              const Subspace& target) {
  if (target.ambient_dim() != polar.d)
    throw DomainError("eigenfunction_recovery: target ambient dim mismatch");
  const LeadingSubspace lead = leading_subspace(empirical_extreme_cov(polar, k), p);
  return rho_distance(lead.subspace, target);
}

namespace {

// Uniform v-subset of {0, ..., pool-1} by partial Fisher-Yates.
std::vector<std::size_t> draw_subset(std::size_t pool, std::size_t v, CounterRng& rng) {
  std::vector<std::size_t> items(pool);
  for (std::size_t i = 0; i < pool; ++i) items[i] = i;
  for (std::size_t i = 0; i < v; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_u64() % (pool - i));
    std::swap(items[i], items[j]);
  }
  items.resize(v);
  return items;
}

double variant_error(const PolarSample& polar, std::span<const std::size_t> training,
                     std::size_t p, std::span<const std::size_t> validation) {
  const CovarianceEstimate cov = angular_cov_from_rows(
      polar, training, CovarianceVariant::ExtremeTopK, 0.0);
  const LeadingSubspace lead = leading_subspace(cov, p);
  return reconstruction_error(polar, validation, lead.subspace);
}

}  // namespace

CvResult reconstruction_cv(const PolarSample& polar, const CvConfig& cfg) {
  if (cfg.p < 1) throw DomainError("reconstruction_cv: p must be at least 1");
  if (cfg.reps < 1) throw DomainError("reconstruction_cv: reps must be at least 1");
  if (!(cfg.v < cfg.k) || cfg.k > polar.n)
    throw DomainError("reconstruction_cv: require v < k <= n");
  if (cfg.p >= polar.d) throw DomainError("reconstruction_cv: require p < d");

  // Rank all rows once; zero-radius rows sort last and never enter any set.
  const std::size_t usable = polar.nonzero_count();
  if (cfg.k > usable)
    throw DomainError("reconstruction_cv: fewer than k observations with positive radius");
  const std::size_t train_size = cfg.k - cfg.v;

  CvResult result;
  for (auto& e : result.errors) e.resize(cfg.reps);

  parallel_for_index(
      cfg.reps,
      [&](std::size_t rep) {
        CounterRng rng(cfg.seed, rep);

        // Validation rows among the top-k of the full ordering.
        std::vector<std::size_t> validation;
        if (cfg.mode == CvMode::TailHoldout) {
          validation.assign(polar.order.begin(), polar.order.begin() + cfg.v);
        } else {
          for (std::size_t pos : draw_subset(cfg.k, cfg.v, rng))
            validation.push_back(polar.order[pos]);
        }
        std::vector<std::uint8_t> is_validation(polar.n, 0);
        for (std::size_t i : validation) is_validation[i] = 1;

        // Variant 0: the remaining extreme angles. Removing the validation
        // rows does not change the ordering, so these are exactly the top
        // (k - v) of the rest.
        std::vector<std::size_t> extreme_train;
        for (std::size_t pos = 0; pos < cfg.k && extreme_train.size() < train_size; ++pos) {
          const std::size_t row = polar.order[pos];
          if (!is_validation[row]) extreme_train.push_back(row);
        }

        // Variant 1: every non-validation angle with positive radius.
        std::vector<std::size_t> full_train;
        full_train.reserve(usable - cfg.v);
        for (std::size_t pos = 0; pos < usable; ++pos) {
          const std::size_t row = polar.order[pos];
          if (!is_validation[row]) full_train.push_back(row);
        }

        // Variant 2: uniform subsample of the non-validation angles, matched
        // to the extreme training size, fresh per replication.
        std::vector<std::size_t> sub_train;
        for (std::size_t pos : draw_subset(full_train.size(), train_size, rng))
          sub_train.push_back(full_train[pos]);

        result.errors[0][rep] = variant_error(polar, extreme_train, cfg.p, validation);
        result.errors[1][rep] = variant_error(polar, full_train, cfg.p, validation);
        result.errors[2][rep] = variant_error(polar, sub_train, cfg.p, validation);
      },
      cfg.threads);
  return result;
}

FiveNumber five_number_summary(std::span<const double> values) {
  if (values.empty()) throw DomainError("five_number_summary: empty input");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
  };
  return FiveNumber{sorted.front(), quantile(0.25), quantile(0.5), quantile(0.75),
                    sorted.back()};
}

}  // namespace fxpca
