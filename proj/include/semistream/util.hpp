#pragma once

#include <cmath>
#include <cstdint>

namespace semistream {

/// Smallest t with 2^t >= x, for x >= 1. ceil_log2(1) == 0.
inline int ceil_log2(std::int64_t x) {
  int t = 0;
  std::int64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++t;
  }
  return t;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// ceil(pow(base, exp)) with a small guard against pow() landing just above
/// an exact integer (e.g. pow(16, 0.25) -> 2.0000000000000004).
inline std::int64_t ceil_real_pow(double base, double exp) {
  double v = std::pow(base, exp);
  return static_cast<std::int64_t>(std::ceil(v - 1e-9));
}

}  // namespace semistream
