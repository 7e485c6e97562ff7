#include "fkwalk/walk.hpp"

#include <algorithm>

namespace fkwalk {

WalkPath sample_line_walk(double q1, const HyperfiniteGrid& grid, SeedSpec seed) {
  WalkPath path{grid, Manifold::euclidean_line(), {}, grid.step_scale()};
  path.points.reserve(static_cast<std::size_t>(grid.slices) + 1);
  path.points.emplace_back(q1);
  walk_line_stream(q1, grid, seed, false,
                   [&](long, double x) { path.points.emplace_back(x); });
  return path;
}

WalkPath sample_pinned_line_walk(double q1, double q2, const HyperfiniteGrid& grid,
                                 SeedSpec seed) {
  PinnedLineWalkSampler sampler(q1, q2, grid);
  WalkPath path{grid, Manifold::euclidean_line(), {}, grid.step_scale()};
  path.points.reserve(static_cast<std::size_t>(grid.slices) + 1);
  path.points.emplace_back(q1);
  sampler.run(seed, false, [&](long, double x) { path.points.emplace_back(x); });
  return path;
}

WalkPath sample_manifold_walk(const Manifold& m, const Point& q1,
                              const HyperfiniteGrid& grid, SeedSpec seed) {
  ManifoldWalkSampler sampler(m, q1, grid);
  WalkPath path{grid, m, {}, sampler.step_length()};
  path.points.reserve(static_cast<std::size_t>(grid.slices) + 1);
  path.points.push_back(m.canonicalize(q1));
  sampler.run(seed, [&](long, const Point& p) { path.points.push_back(p); });
  return path;
}

Point path_position(const WalkPath& path, double s) {
  const HyperfiniteGrid& g = path.grid;
  if (s < 0 || s > g.horizon * (1 + 1e-12)) throw DomainError("time outside walk horizon");
  s = std::min(s, g.horizon);
  const double u = s / g.epsilon;
  long k = static_cast<long>(std::floor(u));
  k = std::clamp(k, 0L, g.slices - 1);
  const double frac = u - static_cast<double>(k);
  const Point& a = path.points[static_cast<std::size_t>(k)];
  const Point& b = path.points[static_cast<std::size_t>(k) + 1];
  if (frac <= 1e-12) return a;
  if (frac >= 1 - 1e-12) return b;
  if (path.manifold.kind() == ManifoldKind::EuclideanLine ||
      path.manifold.kind() == ManifoldKind::EuclideanSpace) {
    Point p = a;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
      p.coords[i] += frac * (b[i] - a[i]);
    return p;
  }
  if (path.manifold.points_equal(a, b, 1e-14)) return a;
  const TangentDirection dir = path.manifold.direction_to(a, b);
  return path.manifold.geodesic_step(a, dir, frac * path.step_length);
}

}  // namespace fkwalk
