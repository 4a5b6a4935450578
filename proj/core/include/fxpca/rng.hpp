#pragma once

#include <cstdint>

namespace fxpca {

/// Counter-based deterministic random stream, version-pinned as
/// "splitmix64-counter-v1":
///
///   key          = mix(mix(base_seed + GAMMA) ^ mix(stream_id + GAMMA2))
///   value(c)     = mix(key + (c + 1) * GAMMA)
///
/// where mix is the SplitMix64 finalizer, GAMMA = 0x9E3779B97F4A7C15 and
/// GAMMA2 = 0x3C6EF372FE94F82A. Draw number c of stream (base_seed, stream_id)
/// is a pure function of the triple, so parallel replications partition the
/// stream space and never share state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t base_seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
  double next_uniform() noexcept;

  /// Pareto(alpha) on [scale, inf): scale * U^(-1/alpha).
  double next_pareto(double alpha, double scale = 1.0) noexcept;

  /// Centered normal via Box-Muller; consumes exactly two uniforms per draw.
  double next_normal(double sigma) noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

  /// The pinned generator as a pure function, exposed for stream tests.
  static std::uint64_t value_at(std::uint64_t base_seed, std::uint64_t stream_id,
                                std::uint64_t counter) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fxpca
