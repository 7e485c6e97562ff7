#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fkwalk/errors.hpp"
#include "fkwalk/rng.hpp"

namespace fkwalk {

enum class ManifoldKind {
  EuclideanLine,
  EuclideanSpace,
  Circle,
  Sphere2,
  HyperbolicPlane,
  Chart,
};

/// Coordinates in the manifold's canonical chart:
///   EuclideanLine/EuclideanSpace  cartesian
///   Circle                        angle in [0, 2pi)
///   Sphere2                       (colatitude in [0, pi], longitude in [0, 2pi))
///   HyperbolicPlane               upper half plane (x, y), y > 0
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  explicit Point(double x) : coords{x} {}
  Point(double a, double b) : coords{a, b} {}

  double operator[](std::size_t i) const { return coords[i]; }
  std::size_t dim() const { return coords.size(); }
};

/// Unit tangent vector (g-norm 1) expressed in canonical-chart components.
/// At a Sphere2 pole, where the (colat, lon) frame degenerates, the two
/// components are read as a local orthonormal pair scaled by 1/r: the
/// direction's azimuth is atan2(c1, c0).
struct TangentDirection {
  std::vector<double> components;
};

/// Chart metrics come from a fixed catalogue (no expression parsing):
///   "euclidean"     identity metric, any dimension, params: none
///   "round_sphere"  2-d (colat, lon) round metric, params: {radius}
///   "half_plane"    2-d hyperbolic upper half plane, params: {pseudo_radius}
struct ChartSpec {
  std::string metric_name;
  std::vector<double> params;
  std::vector<double> box_lo;
  std::vector<double> box_hi;
};

struct BallVolume {
  double value = 0.0;
  double std_error = 0.0;
  bool clamped = false;  // radius exceeded the manifold diameter
};

struct GeodesicEnd {
  Point point;
  TangentDirection direction;  // parallel-transported tangent at the endpoint
};

class Manifold {
 public:
  static Manifold euclidean_line();
  static Manifold euclidean_space(int dimension);
  static Manifold circle(double radius);
  static Manifold sphere2(double radius);
  static Manifold hyperbolic_plane(double pseudo_radius);
  /// Validates SPD of the catalogue metric at sampled points of the box.
  static Manifold chart(ChartSpec spec);

  ManifoldKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  /// Circle/Sphere2 radius or HyperbolicPlane pseudo-radius.
  double radius() const { return radius_; }
  const ChartSpec& chart_spec() const;

  bool in_domain(const Point& p) const;
  /// Reduces Circle angles mod 2pi; validates coordinate ranges.
  Point canonicalize(const Point& p) const;

  /// sqrt(|det g|) at p.
  double metric_density(const Point& p) const;

  /// Metric matrix g(p), row-major D*D. Mostly for tests and direction work.
  std::vector<double> metric(const Point& p) const;

  double geodesic_distance(const Point& p, const Point& q) const;

  Point geodesic_step(const Point& p, const TangentDirection& dir, double length) const;

  /// Like geodesic_step but also returns the transported direction.
  GeodesicEnd geodesic_flow(const Point& p, const TangentDirection& dir, double length) const;

  double scalar_curvature(const Point& p) const;

  BallVolume ball_volume(const Point& center, double radius) const;

  /// Scales the given components to unit g-norm at p.
  TangentDirection normalize_direction(const Point& p, std::vector<double> components) const;

  /// Uniform on the unit g-sphere of the tangent space at p.
  TangentDirection sample_unit_direction(const Point& p, CounterRng& rng) const;

  /// Unit initial direction of a shortest geodesic from p to q (p != q).
  TangentDirection direction_to(const Point& p, const Point& q) const;

  /// Coordinate-wise comparison that wraps Circle angles and ignores the
  /// longitude at Sphere2 poles.
  bool points_equal(const Point& p, const Point& q, double tol) const;

  /// Total Riemannian volume for compact manifolds, nullopt otherwise.
  std::optional<double> total_volume() const;

 private:
  Manifold(ManifoldKind k, int dim, double radius) : kind_(k), dim_(dim), radius_(radius) {}

  ManifoldKind kind_;
  int dim_;
  double radius_ = 0.0;
  ChartSpec chart_;
};

}  // namespace fkwalk
