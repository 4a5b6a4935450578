#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fxpca/polar.hpp"
#include "fxpca/rng.hpp"

namespace fxpca {

/// Law of one scalar factor of the multiplicative model.
struct FactorLaw {
  enum class Kind { Pareto, Normal, Constant };
  Kind kind = Kind::Pareto;
  double param = 1.0;   // Pareto tail index, normal sigma, or the constant value
  double scale = 1.0;   // multiplicative scale (Pareto only)

  static FactorLaw pareto(double alpha, double scale = 1.0) {
    return {Kind::Pareto, alpha, scale};
  }
  static FactorLaw normal(double sigma) { return {Kind::Normal, sigma, 1.0}; }
  static FactorLaw constant(double value) { return {Kind::Constant, value, 1.0}; }
};

/// X = sum_j Z_j A_j with independent factors Z_j and fixed basis curves A_j
/// on a d-point grid.
struct MultiplicativeModel {
  std::vector<FactorLaw> factor_laws;
  std::vector<std::vector<double>> basis_curves;  // one curve per factor
  double grid_weight = 1.0;

  std::size_t factors() const { return factor_laws.size(); }
  std::size_t grid_size() const { return basis_curves.empty() ? 0 : basis_curves.front().size(); }
  void validate() const;
};

/// The six-factor sine/cosine demo model: two Pareto(0.5) factors carrying the
/// extremes (scales 1 and 0.8) and four centered normal noise factors with
/// sigma 20, 16, 12, 8, paired with sin/cos curves of frequencies
/// (2, 3, 1, 4, 5, 6) sampled at grid midpoints.
MultiplicativeModel six_factor_sine_model(std::size_t d = 48);

/// Curves of the six-factor model rescaled to unit L2 norm (the extreme
/// angular support is the span of the first two).
std::vector<std::vector<double>> six_factor_unit_curves(std::size_t d = 48);

FunctionalSample sample_multiplicative(const MultiplicativeModel& model, std::size_t n,
                                       std::uint64_t base_seed, std::uint64_t stream_id = 0);

/// Radii of n multiplicative draws without materializing the curves
/// (norms via the Gram matrix of the basis curves), together with the factor
/// draws so selected rows can be materialized later. Uses the same stream and
/// draw order as sample_multiplicative.
struct MultiplicativeDraws {
  std::vector<double> radii;
  std::vector<double> factors;  // row-major n x d_factors
};
MultiplicativeDraws sample_multiplicative_radii(const MultiplicativeModel& model, std::size_t n,
                                                std::uint64_t base_seed,
                                                std::uint64_t stream_id = 0);

/// Materializes the curve of one factor draw.
std::vector<double> multiplicative_curve(const MultiplicativeModel& model,
                                         std::span<const double> factor_row);

/// Heavy-tailed Dirac mixture: R ~ Pareto(alpha) on [1,inf), and given R the
/// angle is e_I with P[I = i] proportional to i^(-w) for i <= floor(R),
/// w in {1, 2}. Rows whose index exceeds the embedding dimension d_trunc are
/// flagged and bucketed on the last grid axis so escaping mass stays
/// measurable.
struct MixtureModel {
  double alpha = 1.0;
  int weight_exponent = 2;  // 1 or 2
  std::size_t d_trunc = 48;
  double grid_weight = 1.0;
  void validate() const;
};

struct MixtureDraws {
  FunctionalSample sample;
  std::vector<std::uint64_t> angle_index;  // exact I per row
  std::vector<std::uint8_t> escaped;       // I > d_trunc
};

MixtureDraws sample_mixture(const MixtureModel& model, std::size_t n, std::uint64_t base_seed,
                            std::uint64_t stream_id = 0);

/// Draws the mixture index I for a given floor(R) = m; exposed for the
/// conditional-weight tests.
std::uint64_t sample_mixture_index(int weight_exponent, std::uint64_t m, CounterRng& rng);

/// Triangular spike of height exp(Z) and width 3 Z^2 exp(-2Z) starting at 0,
/// scaled by an independent Pareto factor rho. Exact norms: sup = rho exp(Z),
/// L2 = rho Z. Discretized on left-endpoint nodes i/d with weight 1/d so the
/// grid includes the spike peak at 0.
struct SpikedProcessModel {
  double alpha_z = 10.0;
  double alpha_rho = 1.0;
  std::size_t grid_size = 4096;
  void validate() const;
};

struct SpikedDraws {
  FunctionalSample sample;
  std::vector<double> sup_norm;  // exact rho * exp(Z) per row
  std::vector<double> l2_norm;   // exact rho * Z per row
};

SpikedDraws sample_spiked(const SpikedProcessModel& model, std::size_t n,
                          std::uint64_t base_seed, std::uint64_t stream_id = 0);

/// Mean over the k most extreme angles of the squared angular mass beyond the
/// first d_cut grid axes. Requires 1 <= d_cut < d.
double tail_mass_beyond(const PolarSample& polar, std::size_t d_cut, std::size_t k);

}  // namespace fxpca
