#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fkwalk/errors.hpp"
#include "fkwalk/grid.hpp"
#include "fkwalk/manifold.hpp"
#include "fkwalk/rng.hpp"

namespace fkwalk {

/// A sampled walk: n+1 points at the lattice times, every consecutive pair
/// at geodesic distance step_length.
struct WalkPath {
  HyperfiniteGrid grid;
  Manifold manifold;
  std::vector<Point> points;
  double step_length = 0.0;
};

/// Step length used by the manifold walk: sqrt(D * epsilon). An isotropic
/// fixed-length step of length l generates (l^2 / 2D) Laplacian per step, so
/// this choice matches one half Laplacian per unit time in any dimension
/// (and reduces to sqrt(epsilon) on the line).
inline double manifold_step_length(const Manifold& m, const HyperfiniteGrid& g) {
  return std::sqrt(static_cast<double>(m.dimension()) * g.epsilon);
}

// ---------------------------------------------------------------------------
// Streaming samplers. Estimators consume walks step by step without
// materializing paths; WalkPath builders below wrap these.
// ---------------------------------------------------------------------------

/// Free +-sqrt(epsilon) walk on the line. Calls visit(k, x_k) for k = 1..n
/// and returns the endpoint. With `flip`, all signs are inverted (antithetic
/// mate of the same stream).
template <class F>
double walk_line_stream(double q1, const HyperfiniteGrid& grid, SeedSpec seed, bool flip,
                        F&& visit) {
  CounterRng rng(seed);
  const double s = grid.step_scale();
  double x = q1;
  for (long k = 1; k <= grid.slices; ++k) {
    int sign = rng.next_sign();
    if (flip) sign = -sign;
    x += sign * s;
    visit(k, x);
  }
  return x;
}

/// Endpoint-pinned line walk: uniform over all sign arrangements reaching q2,
/// realized as a seeded shuffle of the fixed up/down multiset. Reusable to
/// amortize the step buffer across samples.
class PinnedLineWalkSampler {
 public:
  PinnedLineWalkSampler(double q1, double q2, const HyperfiniteGrid& grid)
      : q1_(q1), grid_(grid), step_(grid.step_scale()) {
    const double ratio = (q2 - q1) / step_;
    const long m = std::llround(ratio);
    const double snapped = q1_ + static_cast<double>(m) * step_;
    const double tol = 1e-9 * std::max({1.0, std::abs(q1), std::abs(q2)});
    const bool parity_ok = ((grid.slices - m) % 2) == 0;
    if (std::abs(q2 - snapped) > tol || !parity_ok || std::abs(m) > grid.slices) {
      // Two nearest reachable lattice values (right parity, within range).
      long lo, hi;
      if (m > grid.slices) {
        lo = hi = grid.slices;  // nothing beyond the lattice extreme
      } else if (m < -grid.slices) {
        lo = hi = -grid.slices;
      } else {
        auto reachable = [&](long j) { return ((grid_.slices - j) % 2) == 0; };
        lo = hi = m;
        while (!reachable(lo)) --lo;
        while (!reachable(hi)) ++hi;
        if (lo == hi) {
          // m itself is reachable but q2 is off-lattice: bracket it.
          if (snapped > q2) lo = m - 2; else hi = m + 2;
          lo = std::max(lo, -grid.slices);
          hi = std::min(hi, grid.slices);
        }
      }
      throw ReachabilityError("endpoint is not reachable on the step lattice",
                              q1_ + static_cast<double>(lo) * step_,
                              q1_ + static_cast<double>(hi) * step_);
    }
    m_ = m;
    steps_.resize(static_cast<std::size_t>(grid.slices));
    n_up_ = (grid.slices + m) / 2;
  }

  /// Exact lattice endpoint (bit-equal across seeds).
  double endpoint() const { return q1_ + static_cast<double>(m_) * step_; }
  long endpoint_index() const { return m_; }
  const HyperfiniteGrid& grid() const { return grid_; }

  /// Calls visit(k, x_k) for k = 1..n. With `reverse`, the shuffled step
  /// sequence is consumed backwards (the path reflected through the bridge
  /// center) -- the antithetic mate, still uniform and pinned.
  template <class F>
  void run(SeedSpec seed, bool reverse, F&& visit) {
    CounterRng rng(seed);
    const long n = grid_.slices;
    for (long i = 0; i < n; ++i) steps_[i] = i < n_up_ ? 1 : -1;
    for (long i = n - 1; i > 0; --i) {
      const long j = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
      std::swap(steps_[i], steps_[j]);
    }
    long lattice = 0;
    for (long k = 1; k <= n; ++k) {
      lattice += steps_[reverse ? n - k : k - 1];
      visit(k, k == n ? endpoint() : q1_ + static_cast<double>(lattice) * step_);
    }
  }

 private:
  double q1_;
  HyperfiniteGrid grid_;
  double step_;
  long m_ = 0;
  long n_up_ = 0;
  std::vector<signed char> steps_;
};

namespace detail {
struct V3 {
  double x, y, z;
};
}  // namespace detail

/// Geodesic-step walk on a manifold: each slice moves by
/// manifold_step_length() in a fresh uniform tangent direction.
class ManifoldWalkSampler {
 public:
  ManifoldWalkSampler(Manifold m, Point q1, const HyperfiniteGrid& grid)
      : manifold_(std::move(m)), q1_(manifold_.canonicalize(q1)), grid_(grid),
        step_(manifold_step_length(manifold_, grid)) {
    if (!manifold_.in_domain(q1_)) throw DomainError("walk start outside domain");
  }

  double step_length() const { return step_; }
  const Manifold& manifold() const { return manifold_; }
  const HyperfiniteGrid& grid() const { return grid_; }

  /// Calls visit(k, const Point&) for k = 1..n; returns the endpoint.
  template <class F>
  Point run(SeedSpec seed, F&& visit) const {
    CounterRng rng(seed);
    switch (manifold_.kind()) {
      case ManifoldKind::EuclideanLine: {
        double x = q1_[0];
        for (long k = 1; k <= grid_.slices; ++k) {
          x += rng.next_sign() * step_;
          visit(k, Point(x));
        }
        return Point(x);
      }
      case ManifoldKind::Circle: {
        const double dtheta = step_ / manifold_.radius();
        double theta = q1_[0];
        Point p(theta);
        for (long k = 1; k <= grid_.slices; ++k) {
          theta += rng.next_sign() * dtheta;
          theta = std::fmod(theta, 6.283185307179586476925286766559);
          if (theta < 0) theta += 6.283185307179586476925286766559;
          p.coords[0] = theta;
          visit(k, p);
        }
        return p;
      }
      case ManifoldKind::Sphere2:
        return run_sphere(rng, visit);
      default: {
        Point p = q1_;
        for (long k = 1; k <= grid_.slices; ++k) {
          const TangentDirection dir = manifold_.sample_unit_direction(p, rng);
          try {
            p = manifold_.geodesic_step(p, dir, step_);
          } catch (ChartExitError& e) {
            e.step_index = k;
            throw;
          }
          visit(k, p);
        }
        return p;
      }
    }
  }

 private:
  template <class F>
  Point run_sphere(CounterRng& rng, F&& visit) const {
    using detail::V3;
    const double r = manifold_.radius();
    const double alpha = step_ / r;
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double st0 = std::sin(q1_[0]), ct0 = std::cos(q1_[0]);
    V3 p{st0 * std::cos(q1_[1]), st0 * std::sin(q1_[1]), ct0};
    Point out(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (long k = 1; k <= grid_.slices; ++k) {
      // Orthonormal frame perpendicular to p without trig on coordinates.
      V3 e1;
      if (std::abs(p.z) < 0.9) {
        e1 = V3{-p.y, p.x, 0.0};
      } else {
        e1 = V3{p.z, 0.0, -p.x};
      }
      const double n1 = std::sqrt(e1.x * e1.x + e1.y * e1.y + e1.z * e1.z);
      e1 = V3{e1.x / n1, e1.y / n1, e1.z / n1};
      const V3 e2{p.y * e1.z - p.z * e1.y, p.z * e1.x - p.x * e1.z, p.x * e1.y - p.y * e1.x};
      const double phi = two_pi * rng.next_double();
      const double cp = std::cos(phi), sp = std::sin(phi);
      const V3 u{cp * e1.x + sp * e2.x, cp * e1.y + sp * e2.y, cp * e1.z + sp * e2.z};
      p = V3{ca * p.x + sa * u.x, ca * p.y + sa * u.y, ca * p.z + sa * u.z};
      // Renormalize drift from repeated rotations.
      const double pn = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
      p = V3{p.x / pn, p.y / pn, p.z / pn};
      out.coords[0] = std::acos(p.z < -1.0 ? -1.0 : (p.z > 1.0 ? 1.0 : p.z));
      double lon = std::atan2(p.y, p.x);
      if (lon < 0) lon += two_pi;
      out.coords[1] = lon;
      visit(k, out);
    }
    return out;
  }

  Manifold manifold_;
  Point q1_;
  HyperfiniteGrid grid_;
  double step_;
};

// ---------------------------------------------------------------------------
// Path builders and interpolation
// ---------------------------------------------------------------------------

WalkPath sample_line_walk(double q1, const HyperfiniteGrid& grid, SeedSpec seed);
WalkPath sample_pinned_line_walk(double q1, double q2, const HyperfiniteGrid& grid,
                                 SeedSpec seed);
WalkPath sample_manifold_walk(const Manifold& m, const Point& q1,
                              const HyperfiniteGrid& grid, SeedSpec seed);

/// Position at time s in [0, t]: exact lattice points at s = t_k, geodesic
/// interpolation inside a slice (linear on the line).
Point path_position(const WalkPath& path, double s);

}  // namespace fkwalk
