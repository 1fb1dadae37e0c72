#ifndef DUALQKD_TESTS_TEST_UTIL_HPP
#define DUALQKD_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <random>

#include "dualqkd/core.hpp"

namespace dualqkd::testing {

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Fixed seed so property failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'd0a1ULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline SpdSpec random_spd() {
  return SpdSpec{uniform(1e6, 1e10), uniform(0.001, 1.0), uniform(0.0, 1e-4),
                 uniform(0.0, 0.1)};
}

inline HomodyneSpec random_homodyne() {
  return HomodyneSpec{uniform(1e5, 1e8), uniform(0.3, 1.0), uniform(0.0, 0.5)};
}

}  // namespace dualqkd::testing

#endif  // DUALQKD_TESTS_TEST_UTIL_HPP
