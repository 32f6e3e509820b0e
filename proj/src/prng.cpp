#include "binmosaic/prng.hpp"

#include <stdexcept>

namespace binmosaic {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform: empty range");
  }
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) {
    return next();
  }
  const std::uint64_t range = span + 1;
  // 2^64 mod range, computed without 128-bit arithmetic.
  const std::uint64_t reject_below = (0 - range) % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x < reject_below);
  return lo + x % range;
}

}  // namespace binmosaic
