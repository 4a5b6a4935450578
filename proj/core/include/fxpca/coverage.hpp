#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fxpca/bounds.hpp"
#include "fxpca/linalg.hpp"
#include "fxpca/simulate.hpp"

namespace fxpca {

/// Monte Carlo harness verifying the concentration bounds on the
/// multiplicative model. A large fresh draw supplies an oracle for the
/// pre-asymptotic covariance at the (1 - k/n) radial quantile; replications
/// then measure the deviation of the empirical top-k estimate and of the
/// fixed-threshold estimate with divisor k.
struct CoverageConfig {
  MultiplicativeModel model;
  std::size_t n = 5000;
  std::size_t k = 100;
  std::size_t reps = 2000;
  double delta = 0.1;
  std::uint64_t base_seed = 0;
  std::size_t oracle_draws = 1'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct CoverageResult {
  double bound_total = 0.0;       // closed-form bound at (k, delta)
  double oracle_budget = 0.0;     // 3 / sqrt(k_oracle)
  double oracle_threshold = 0.0;  // radial quantile estimated from the oracle draw
  std::size_t oracle_k = 0;       // exceedances used by the oracle
  std::vector<double> topk_deviation;       // ||Chat_k - C*||_HS per replication
  std::vector<double> fixed_thr_deviation;  // ||Cbar_{t*,k} - C*||_HS per replication

  std::size_t count_within(const std::vector<double>& dev, double tol) const;
};

/// Oracle covariance at the (1 - level) radial quantile of the model, from
/// `draws` fresh samples on stream (base_seed, stream 0).
struct OracleCovariance {
  SymmetricOperator op;
  double threshold = 0.0;
  std::size_t k_used = 0;
};
OracleCovariance oracle_extreme_cov(const MultiplicativeModel& model, std::size_t draws,
                                    double level, std::uint64_t base_seed);

/// Runs the replication experiment. Replication r uses stream (base_seed,
/// r + 1); results are keyed by replication index, so the outcome does not
/// depend on the thread count.
CoverageResult run_coverage(const CoverageConfig& cfg);

}  // namespace fxpca
