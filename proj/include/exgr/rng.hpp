#pragma once

#include <cstdint>
#include <stdexcept>

#include "exgr/rational.hpp"

namespace exgr {

/// Deterministic 64-bit linear congruential generator, identical on every
/// platform:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// Draws take the top 32 bits of the updated state; integer ranges reduce
/// them modulo the range size.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

  /// Uniform-ish integer in [lo, hi] (inclusive); modulo bias is acceptable
  /// and documented for reproducibility.
  int next_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Lcg64: empty range");
    const std::uint32_t span = static_cast<std::uint32_t>(hi - lo + 1);
    return lo + static_cast<int>(next_u32() % span);
  }

  /// Small rational with numerator in [-max_num, max_num] and denominator in
  /// [1, max_den].
  Rat next_rat(int max_num, int max_den) {
    return Rat::ratio(next_int(-max_num, max_num), next_int(1, max_den));
  }

  int next_nonzero_int(int lo, int hi) {
    for (;;) {
      const int v = next_int(lo, hi);
      if (v != 0) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace exgr
