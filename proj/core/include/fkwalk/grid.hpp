#pragma once

#include <cmath>

#include "fkwalk/errors.hpp"

namespace fkwalk {

/// Finite time lattice {k*epsilon : k = 0..n}, epsilon = t/n.
struct HyperfiniteGrid {
  double horizon = 1.0;   // t
  long slices = 1;        // n
  double epsilon = 1.0;   // t / n

  static HyperfiniteGrid make(double t, long n) {
    if (!(t > 0) || !std::isfinite(t)) throw ConfigError("grid horizon must be positive");
    if (n < 1) throw ConfigError("grid must have at least one slice");
    return HyperfiniteGrid{t, n, t / static_cast<double>(n)};
  }

  double time(long k) const { return k == slices ? horizon : k * epsilon; }
  double step_scale() const { return std::sqrt(epsilon); }
};

}  // namespace fkwalk
