#pragma once

#include <cstdint>
#include <random>

namespace acyclic {

// Seeded generator used throughout. mt19937_64's output sequence is pinned
// by the standard, so fixed seeds reproduce bit-for-bit on any platform.
using Rng = std::mt19937_64;

// Uniform draw from [0, n) by rejection; avoids the implementation-defined
// std::uniform_int_distribution.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform draw from [0, 1) with 53 bits of precision.
inline double uniform_real(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace acyclic
