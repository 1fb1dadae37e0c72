#ifndef DUALQKD_SRC_CHECK_HPP
#define DUALQKD_SRC_CHECK_HPP

#include <cmath>

#include "dualqkd/core.hpp"

namespace dualqkd::internal {

// NaN fails every comparison, so it is rejected here as well.
inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(what);
}

}  // namespace dualqkd::internal

#endif  // DUALQKD_SRC_CHECK_HPP
