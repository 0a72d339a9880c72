#pragma once

#include <cstdint>

namespace lca {

/// xorshift64* generator. The shift triple (12, 25, 27) and the output
/// multiplier are fixed so that seeded grids are identical across builds
/// and platforms.
class Xorshift64Star {
 public:
  static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMultiplier = 2685821657736338717ULL;

  constexpr explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

  constexpr std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kMultiplier;
  }

  constexpr bool next_bit() { return (next() >> 63) != 0; }

  /// Integer in [lo, hi] by modulo reduction (slightly biased).
  constexpr std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace lca
