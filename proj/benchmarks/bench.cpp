#include <benchmark/benchmark.h>

#include <cmath>

#include "fxpca/covariance.hpp"
#include "fxpca/diagnostics.hpp"
#include "fxpca/linalg.hpp"
#include "fxpca/rng.hpp"
#include "fxpca/simulate.hpp"

using namespace fxpca;

namespace {

SymmetricOperator random_cov(std::size_t d, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  SymmetricOperator a(d);
  std::vector<double> v(d);
  for (int r = 0; r < 200; ++r) {
    double norm = 0.0;
    for (double& x : v) {
      x = rng.next_normal(1.0);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    a.add_scaled_outer(v, 1.0 / 200.0);
  }
  return a;
}

void SymmetricEigen(benchmark::State& state) {
  const auto a = random_cov(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto es = symmetric_eigen(a);
    benchmark::DoNotOptimize(es);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SymmetricEigen)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void ExtremeCovariance(benchmark::State& state) {
  const auto model = six_factor_sine_model(48);
  const auto sample = sample_multiplicative(model, 10000, 7);
  const auto polar = polar_decompose(sample);
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto cov = empirical_extreme_cov(polar, k);
    benchmark::DoNotOptimize(cov);
  }
}
BENCHMARK(ExtremeCovariance)->Arg(100)->Arg(1000)->Arg(10000);

void SampleMultiplicative(benchmark::State& state) {
  const auto model = six_factor_sine_model(48);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto sample = sample_multiplicative(model, n, 11, stream++);
    benchmark::DoNotOptimize(sample);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(SampleMultiplicative)->Arg(1000)->Arg(10000);

void SampleMixtureDraws(benchmark::State& state) {
  MixtureModel m;
  m.alpha = 1.0;
  m.weight_exponent = static_cast<int>(state.range(0));
  m.d_trunc = 32;
  const std::size_t n = 100000;
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto draws = sample_mixture(m, n, 13, stream++);
    benchmark::DoNotOptimize(draws);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(SampleMixtureDraws)->Arg(1)->Arg(2);

void HillEstimate(benchmark::State& state) {
  CounterRng rng(17, 0);
  std::vector<double> radii(100000);
  for (double& r : radii) r = rng.next_pareto(1.0);
  for (auto _ : state) {
    auto h = hill(radii, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(HillEstimate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
