#include "fxpca/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fxpca {

void MultiplicativeModel::validate() const {
  if (factor_laws.empty()) throw DomainError("multiplicative model: no factors");
  if (basis_curves.size() != factor_laws.size())
    throw DomainError("multiplicative model: one basis curve per factor required");
  const std::size_t d = grid_size();
  if (d < 1) throw DomainError("multiplicative model: empty basis curves");
  for (const auto& c : basis_curves) {
    if (c.size() != d) throw DomainError("multiplicative model: basis curves on unequal grids");
    for (double v : c)
      if (!std::isfinite(v)) throw DomainError("multiplicative model: non-finite basis curve");
  }
  if (!(grid_weight > 0.0)) throw DomainError("multiplicative model: grid weight must be positive");
}

MultiplicativeModel six_factor_sine_model(std::size_t d) {
  if (d < 2) throw DomainError("six-factor model: grid too small");
  MultiplicativeModel m;
  m.factor_laws = {FactorLaw::pareto(0.5, 1.0), FactorLaw::pareto(0.5, 0.8),
                   FactorLaw::normal(20.0),      FactorLaw::normal(0.8 * 20.0),
                   FactorLaw::normal(0.6 * 20.0), FactorLaw::normal(0.4 * 20.0)};
  const double freq[6] = {2.0, 3.0, 1.0, 4.0, 5.0, 6.0};
  m.basis_curves.resize(6, std::vector<double>(d));
  for (std::size_t j = 0; j < 6; ++j) {
    const bool use_sin = (j % 2 == 0);  // sin for factors 1,3,5; cos for 2,4,6
    for (std::size_t i = 0; i < d; ++i) {
      const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(d);
      const double phase = 2.0 * std::numbers::pi * freq[j] * x;
      m.basis_curves[j][i] = use_sin ? std::sin(phase) : std::cos(phase);
    }
  }
  m.grid_weight = 1.0;
  return m;
}

std::vector<std::vector<double>> six_factor_unit_curves(std::size_t d) {
  MultiplicativeModel m = six_factor_sine_model(d);
  for (auto& c : m.basis_curves) {
    const double nrm = l2_norm(c, m.grid_weight);
    for (double& v : c) v /= nrm;
  }
  return m.basis_curves;
}

namespace {

double draw_factor(const FactorLaw& law, CounterRng& rng) {
  switch (law.kind) {
    case FactorLaw::Kind::Pareto:
      return rng.next_pareto(law.param, law.scale);
    case FactorLaw::Kind::Normal:
      return rng.next_normal(law.param);
    case FactorLaw::Kind::Constant:
      return law.param;
  }
  return 0.0;
}

}  // namespace

FunctionalSample sample_multiplicative(const MultiplicativeModel& model, std::size_t n,
                                       std::uint64_t base_seed, std::uint64_t stream_id) {
  model.validate();
  if (n < 1) throw DomainError("sample_multiplicative: n must be at least 1");
  const std::size_t d = model.grid_size();
  const std::size_t f = model.factors();
  FunctionalSample out;
  out.n = n;
  out.d = d;
  out.grid_weight = model.grid_weight;
  out.values.assign(n * d, 0.0);
  CounterRng rng(base_seed, stream_id);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = out.row(i);
    for (std::size_t j = 0; j < f; ++j) {
      const double z = draw_factor(model.factor_laws[j], rng);
      const auto& curve = model.basis_curves[j];
      for (std::size_t r = 0; r < d; ++r) row[r] += z * curve[r];
    }
  }
  return out;
}

MultiplicativeDraws sample_multiplicative_radii(const MultiplicativeModel& model, std::size_t n,
                                                std::uint64_t base_seed,
                                                std::uint64_t stream_id) {
  model.validate();
  if (n < 1) throw DomainError("sample_multiplicative_radii: n must be at least 1");
  const std::size_t f = model.factors();
  // Gram matrix of the basis curves under the grid-weighted inner product:
  // ||sum z_j A_j||^2 = z^T G z.
  std::vector<double> gram(f * f);
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b)
      gram[a * f + b] =
          l2_inner(model.basis_curves[a], model.basis_curves[b], model.grid_weight);

  MultiplicativeDraws out;
  out.radii.resize(n);
  out.factors.resize(n * f);
  CounterRng rng(base_seed, stream_id);
  for (std::size_t i = 0; i < n; ++i) {
    double* z = out.factors.data() + i * f;
    for (std::size_t j = 0; j < f; ++j) z[j] = draw_factor(model.factor_laws[j], rng);
    double q = 0.0;
    for (std::size_t a = 0; a < f; ++a) {
      q += gram[a * f + a] * z[a] * z[a];
      for (std::size_t b = a + 1; b < f; ++b) q += 2.0 * gram[a * f + b] * z[a] * z[b];
    }
    out.radii[i] = std::sqrt(std::max(q, 0.0));
  }
  return out;
}

std::vector<double> multiplicative_curve(const MultiplicativeModel& model,
                                         std::span<const double> factor_row) {
  if (factor_row.size() != model.factors())
    throw DomainError("multiplicative_curve: factor row length mismatch");
  const std::size_t d = model.grid_size();
  std::vector<double> x(d, 0.0);
  for (std::size_t j = 0; j < factor_row.size(); ++j)
    for (std::size_t r = 0; r < d; ++r) x[r] += factor_row[j] * model.basis_curves[j][r];
  return x;
}

void MixtureModel::validate() const {
  if (!(alpha > 0.0)) throw DomainError("mixture model: alpha must be positive");
  if (weight_exponent != 1 && weight_exponent != 2)
    throw DomainError("mixture model: weight exponent must be 1 or 2");
  if (d_trunc < 1) throw DomainError("mixture model: embedding dimension must be at least 1");
  if (!(grid_weight > 0.0)) throw DomainError("mixture model: grid weight must be positive");
}

std::uint64_t sample_mixture_index(int weight_exponent, std::uint64_t m, CounterRng& rng) {
  if (m < 1) throw DomainError("mixture index: floor(R) must be at least 1");
  if (m == 1) return 1;
  if (weight_exponent == 2) {
    // Devroye-style rejection for P[I=i] ~ 1/i^2: the envelope floor(1/U) has
    // P = 1/(i(i+1)); accepting with probability (i+1)/(2i) tilts it to 1/i^2.
    // Values beyond m are rejected to truncate.
    for (;;) {
      const double u = rng.next_uniform();
      const double v = rng.next_uniform();
      const double x = std::floor(1.0 / u);
      if (x > static_cast<double>(m)) continue;
      const std::uint64_t i = static_cast<std::uint64_t>(x);
      if (v * 2.0 * static_cast<double>(i) <= static_cast<double>(i) + 1.0) return i;
    }
  }
  // w = 1: the envelope I = floor(exp(U log(m+1))) has P[I=i] ~ log(1+1/i);
  // accepting with probability log(2) / (i log(1+1/i)) tilts it to 1/i.
  // The acceptance probability lies in (log 2, 1].
  const double logm1 = std::log(static_cast<double>(m) + 1.0);
  for (;;) {
    const double u = rng.next_uniform();
    const double v = rng.next_uniform();
    double x = std::floor(std::exp(u * logm1));
    if (x > static_cast<double>(m)) x = static_cast<double>(m);
    const std::uint64_t i = static_cast<std::uint64_t>(x);
    const double accept =
        std::numbers::ln2 / (static_cast<double>(i) * std::log1p(1.0 / static_cast<double>(i)));
    if (v <= accept) return i;
  }
}

MixtureDraws sample_mixture(const MixtureModel& model, std::size_t n, std::uint64_t base_seed,
                            std::uint64_t stream_id) {
  model.validate();
  if (n < 1) throw DomainError("sample_mixture: n must be at least 1");
  const std::size_t d = model.d_trunc;
  MixtureDraws out;
  out.sample.n = n;
  out.sample.d = d;
  out.sample.grid_weight = model.grid_weight;
  out.sample.values.assign(n * d, 0.0);
  out.angle_index.resize(n);
  out.escaped.resize(n);
  // Basis vectors are coordinate indicators rescaled to unit L2 norm.
  const double unit = 1.0 / std::sqrt(model.grid_weight);
  CounterRng rng(base_seed, stream_id);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rng.next_pareto(model.alpha, 1.0);
    // floor(R) is capped at 2^62 so the integer conversion stays defined for
    // very small alpha.
    const double mf = std::min(std::floor(r), 0x1.0p62);
    const std::uint64_t m = static_cast<std::uint64_t>(mf);
    const std::uint64_t idx = sample_mixture_index(model.weight_exponent, m, rng);
    out.angle_index[i] = idx;
    const bool esc = idx > d;
    out.escaped[i] = esc ? 1 : 0;
    const std::size_t col = esc ? d - 1 : static_cast<std::size_t>(idx - 1);
    out.sample.values[i * d + col] = r * unit;
  }
  return out;
}

void SpikedProcessModel::validate() const {
  if (!(alpha_rho > 0.0) || !(alpha_z > alpha_rho))
    throw DomainError("spiked model: require 0 < alpha_rho < alpha_z");
  if (grid_size < 8) throw DomainError("spiked model: grid too small");
}

SpikedDraws sample_spiked(const SpikedProcessModel& model, std::size_t n,
                          std::uint64_t base_seed, std::uint64_t stream_id) {
  model.validate();
  if (n < 1) throw DomainError("sample_spiked: n must be at least 1");
  const std::size_t d = model.grid_size;
  SpikedDraws out;
  out.sample.n = n;
  out.sample.d = d;
  out.sample.grid_weight = 1.0 / static_cast<double>(d);
  out.sample.values.assign(n * d, 0.0);
  out.sup_norm.resize(n);
  out.l2_norm.resize(n);
  CounterRng rng(base_seed, stream_id);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = rng.next_pareto(model.alpha_z, 1.0);
    const double rho = rng.next_pareto(model.alpha_rho, 1.0);
    const double height = std::exp(z);
    const double width = 3.0 * z * z * std::exp(-2.0 * z);
    out.sup_norm[i] = rho * height;
    out.l2_norm[i] = rho * z;
    auto row = out.sample.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(d);
      if (t >= width) break;  // the spike is supported on [0, width)
      row[j] = rho * (1.0 - t / width) * height;
    }
  }
  return out;
}

double tail_mass_beyond(const PolarSample& polar, std::size_t d_cut, std::size_t k) {
  if (d_cut < 1 || d_cut >= polar.d)
    throw DomainError("tail_mass_beyond: require 1 <= d_cut < d");
  const ExtremeSelection sel = select_extremes(polar, k);
  const double w = polar.grid_weight;
  double total = 0.0;
  for (std::size_t i : sel.indices) {
    const auto theta = polar.angle(i);
    double mass = 0.0;
    for (std::size_t j = d_cut; j < polar.d; ++j) mass += theta[j] * theta[j];
    total += w * mass;
  }
  return total / static_cast<double>(k);
}

}  // namespace fxpca
