#include "fxpca/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fxpca/parallel.hpp"

namespace fxpca {

namespace {

// Adds theta theta^T (grid weight folded in) for each selected draw.
void accumulate_angles(const MultiplicativeModel& model, const MultiplicativeDraws& draws,
                       std::span<const std::size_t> rows, SymmetricOperator& acc) {
  const std::size_t f = model.factors();
  const double w = model.grid_weight;
  for (std::size_t i : rows) {
    std::vector<double> x = multiplicative_curve(
        model, std::span<const double>(draws.factors.data() + i * f, f));
    const double inv = 1.0 / draws.radii[i];
    for (double& v : x) v *= inv;
    acc.add_scaled_outer(x, w);
  }
}

}  // namespace

OracleCovariance oracle_extreme_cov(const MultiplicativeModel& model, std::size_t draws,
                                    double level, std::uint64_t base_seed) {
  if (!(level > 0.0) || !(level >= 1.0 / static_cast<double>(draws)))
    throw DomainError("oracle covariance: level too small for the draw budget");
  MultiplicativeDraws sample = sample_multiplicative_radii(model, draws, base_seed, 0);
  const std::size_t k_oracle =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(level * draws)));
  std::vector<std::size_t> order(draws);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::nth_element(order.begin(), order.begin() + (k_oracle - 1), order.end(),
                   [&](std::size_t a, std::size_t b) { return sample.radii[a] > sample.radii[b]; });
  std::vector<std::size_t> top(order.begin(), order.begin() + k_oracle);

  SymmetricOperator acc(model.grid_size());
  accumulate_angles(model, sample, top, acc);
  acc.scale(1.0 / static_cast<double>(k_oracle));
  double threshold = sample.radii[top.front()];
  for (std::size_t i : top) threshold = std::min(threshold, sample.radii[i]);
  return OracleCovariance{std::move(acc), threshold, k_oracle};
}

std::size_t CoverageResult::count_within(const std::vector<double>& dev, double tol) const {
  std::size_t c = 0;
  for (double v : dev)
    if (v <= tol) ++c;
  return c;
}

CoverageResult run_coverage(const CoverageConfig& cfg) {
  cfg.model.validate();
  if (cfg.k < 1 || cfg.k > cfg.n) throw DomainError("coverage: require 1 <= k <= n");
  if (cfg.reps < 1) throw DomainError("coverage: need at least one replication");

  const double level = static_cast<double>(cfg.k) / static_cast<double>(cfg.n);
  OracleCovariance oracle =
      oracle_extreme_cov(cfg.model, cfg.oracle_draws, level, cfg.base_seed);

  CoverageResult result;
  result.bound_total = bound_total(cfg.n, cfg.k, cfg.delta).b_total;
  result.oracle_budget = 3.0 / std::sqrt(static_cast<double>(oracle.k_used));
  result.oracle_threshold = oracle.threshold;
  result.oracle_k = oracle.k_used;
  result.topk_deviation.resize(cfg.reps);
  result.fixed_thr_deviation.resize(cfg.reps);

  const double t_star = oracle.threshold;
  parallel_for_index(
      cfg.reps,
      [&](std::size_t rep) {
        MultiplicativeDraws draws =
            sample_multiplicative_radii(cfg.model, cfg.n, cfg.base_seed, rep + 1);

        // Top-k rows, ties broken by lower index.
        std::vector<std::size_t> order(cfg.n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return draws.radii[a] > draws.radii[b];
        });
        std::vector<std::size_t> topk(order.begin(), order.begin() + cfg.k);

        SymmetricOperator chat(cfg.model.grid_size());
        accumulate_angles(cfg.model, draws, topk, chat);
        chat.scale(1.0 / static_cast<double>(cfg.k));
        result.topk_deviation[rep] = hs_norm(chat - oracle.op);

        // Fixed-threshold estimate with divisor k (not the exceedance count).
        std::vector<std::size_t> exceed;
        for (std::size_t i = 0; i < cfg.n; ++i)
          if (draws.radii[i] >= t_star) exceed.push_back(i);
        SymmetricOperator cbar(cfg.model.grid_size());
        if (!exceed.empty()) accumulate_angles(cfg.model, draws, exceed, cbar);
        cbar.scale(1.0 / static_cast<double>(cfg.k));
        result.fixed_thr_deviation[rep] = hs_norm(cbar - oracle.op);
      },
      cfg.threads);
  return result;
}

}  // namespace fxpca
