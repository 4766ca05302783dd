#pragma once

#include <cstdint>

namespace edss {

// SplitMix64: tiny counter-based generator with a 64-bit state and full
// 2^64 period.  Every draw advances the state by a fixed odd constant and
// hashes it, so jumping to an arbitrary substream is a single multiply —
// which is what makes per-subject / per-replicate streams cheap and
// order-independent.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Substream k of a master seed, seeded with the (k+1)-th output of
  // SplitMix64(seed).  Hashing the index scatters the streams' start states
  // across the full +kGolden orbit; starting them a mere k draws apart
  // (state = seed + k * kGolden) would alias subject k's draws onto subject
  // k+1's and correlate every pair of streams.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(mix(seed + (k + 1) * kGolden));
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace edss
