#pragma once

#include <cmath>

#include "graphspace/types.hpp"

namespace graphspace {

/// ln C(a, b) via log-gamma; requires 0 <= b <= a.
inline double log_choose(double a, double b) {
  if (b <= 0.0 || b >= a) return 0.0;
  return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

/// ln of the number of non-negative integer matrices with N cells summing
/// to m (stars and bars): ln C(N + m - 1, m).
inline double log_multiset_count(Weight cells, Weight total) {
  return log_choose(static_cast<double>(cells) + static_cast<double>(total) - 1.0,
                    static_cast<double>(total));
}

}  // namespace graphspace
