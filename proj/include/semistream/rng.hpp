#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace semistream::rng {

// Deterministic helpers on top of mt19937_64. std::uniform_int_distribution and
// std::shuffle are implementation-defined, so reproducible seeds go through
// these instead.

/// Unbiased integer in [0, bound) via rejection sampling. bound >= 1.
inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return r % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline bool chance(std::mt19937_64& gen, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return unit(gen) < p;
}

/// Fisher-Yates shuffle driven by below().
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(below(gen, i));
    std::swap(v[i - 1], v[j]);
  }
}

/// splitmix64 step; used to derive independent sub-seeds.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace semistream::rng
