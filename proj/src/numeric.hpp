#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace noisy::detail {

// Ceiling that ignores floating-point noise just above an integer, so that
// e.g. log(9)/log(3) evaluates to exactly 2.
inline std::uint64_t ceil_tolerant(double x) {
  if (x <= 0.0) return 0;
  const double down = std::floor(x);
  if (x - down <= 1e-9 * std::max(1.0, x)) return static_cast<std::uint64_t>(down);
  return static_cast<std::uint64_t>(down) + 1;
}

}  // namespace noisy::detail
