#pragma once

#include <cstdint>
#include <limits>

namespace degex {

/// Seedable, splittable generator (xoshiro256**).
///
/// Seed-to-stream derivation, frozen across versions:
///   * Rng(seed) fills the 256-bit state with four consecutive outputs of
///     splitmix64 started at `seed`.
///   * Rng::stream(seed, index) is Rng(mix64(seed) ^ mix64(index + 0x9E3779B97F4A7C15)),
///     where mix64 is the splitmix64 output finalizer.
/// Randomized routines that run attempts or trials in parallel use one
/// stream per attempt index, so results do not depend on the thread count.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  static Rng stream(std::uint64_t seed, std::uint64_t index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Unbiased integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) noexcept;

 private:
  std::uint64_t s_[4];
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace degex
