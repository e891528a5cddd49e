#include <cmath>
#include <stdexcept>

#include "noisy/algorithms.hpp"

namespace noisy {

double hitting_probability(double p, std::int64_t c, std::int64_t x) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("p must lie in (0, 1/2)");
  if (c < 0 || x < 0 || x > c) throw std::out_of_range("start must satisfy 0 <= x <= c");
  return std::pow((1.0 - p) / p, static_cast<double>(x - c));
}

double expected_hitting_time_bound(double p, std::int64_t c) {
  if (!(p >= 0.0 && p < 0.5)) throw std::invalid_argument("p must lie in [0, 1/2)");
  if (c < 0) throw std::out_of_range("threshold must be non-negative");
  return static_cast<double>(c) / (1.0 - 2.0 * p);
}

}  // namespace noisy
