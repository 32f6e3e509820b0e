#pragma once

#include <cstdint>

namespace binmosaic {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

// SplitMix64 (Steele, Lea & Flood 2014). The output stream for a seed is
// fixed by the published constants, so golden values are portable.
class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next();

  // Uniform integer in [lo, hi] by rejection sampling on the raw 64-bit
  // output: draws below 2^64 mod (hi - lo + 1) are discarded, the rest are
  // reduced modulo the range.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  // Top 53 bits of one draw, i.e. an integer k in [0, 2^53) standing for
  // the dyadic rational k / 2^53 in [0, 1).
  std::uint64_t next_unit_numerator() { return next() >> 11; }

 private:
  std::uint64_t state_;
};

}  // namespace binmosaic
