#include "fxpca/rng.hpp"

#include <cmath>
#include <numbers>

namespace fxpca {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kGamma2 = 0x3C6EF372FE94F82AULL;

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t stream_key(std::uint64_t base_seed, std::uint64_t stream_id) noexcept {
  return mix(mix(base_seed + kGamma) ^ mix(stream_id + kGamma2));
}

}  // namespace

CounterRng::CounterRng(std::uint64_t base_seed, std::uint64_t stream_id) noexcept
    : key_(stream_key(base_seed, stream_id)) {}

std::uint64_t CounterRng::next_u64() noexcept { return mix(key_ + (++counter_) * kGamma); }

double CounterRng::next_uniform() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_pareto(double alpha, double scale) noexcept {
  return scale * std::pow(next_uniform(), -1.0 / alpha);
}

double CounterRng::next_normal(double sigma) noexcept {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterRng::value_at(std::uint64_t base_seed, std::uint64_t stream_id,
                                   std::uint64_t counter) noexcept {
  return mix(stream_key(base_seed, stream_id) + (counter + 1) * kGamma);
}

}  // namespace fxpca
