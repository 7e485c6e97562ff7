#include "doctest.h"

#include <cmath>

#include "fkwalk/manifold.hpp"
#include "fkwalk/rng.hpp"

using namespace fkwalk;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("circle distance wraps around") {
  const Manifold c = Manifold::circle(2.0);
  CHECK(c.geodesic_distance(Point(0.1), Point(0.3)) == doctest::Approx(0.4));
  // Going the short way around.
  CHECK(c.geodesic_distance(Point(0.1), Point(2 * kPi - 0.1)) == doctest::Approx(0.4));
  CHECK(c.total_volume().value() == doctest::Approx(4 * kPi));
}

TEST_CASE("circle canonicalize maps angles into [0, 2pi)") {
  const Manifold c = Manifold::circle(1.0);
  CHECK(c.canonicalize(Point(-0.5))[0] == doctest::Approx(2 * kPi - 0.5));
  CHECK(c.canonicalize(Point(7.0))[0] == doctest::Approx(7.0 - 2 * kPi));
}

TEST_CASE("sphere closed forms") {
  const Manifold s = Manifold::sphere2(2.0);
  // Pole to equator is a quarter of a great circle.
  CHECK(s.geodesic_distance(Point(0.0, 0.0), Point(kPi / 2, 1.0)) == doctest::Approx(kPi));
  // Two equator points separated in longitude.
  CHECK(s.geodesic_distance(Point(kPi / 2, 0.0), Point(kPi / 2, 0.7)) ==
        doctest::Approx(2.0 * 0.7));
  CHECK(s.scalar_curvature(Point(1.0, 1.0)) == doctest::Approx(2.0 / 4.0));
  CHECK(s.total_volume().value() == doctest::Approx(16 * kPi));
  // Geodesic ball area 2 pi r^2 (1 - cos(rho/r)).
  const double rho = 0.5;
  CHECK(s.ball_volume(Point(kPi / 2, 0.0), rho).value ==
        doctest::Approx(2 * kPi * 4.0 * (1 - std::cos(rho / 2.0))));
}

TEST_CASE("hyperbolic plane curvature is constant negative") {
  const Manifold h = Manifold::hyperbolic_plane(1.5);
  CHECK(h.scalar_curvature(Point(0.3, 2.0)) == doctest::Approx(-2.0 / 2.25));
}

TEST_CASE("line and euclidean ball volumes") {
  CHECK(Manifold::euclidean_line().ball_volume(Point(0.0), 0.3).value == doctest::Approx(0.6));
  CHECK(Manifold::euclidean_space(2).ball_volume(Point(0.0, 0.0), 0.3).value ==
        doctest::Approx(kPi * 0.09));
}

TEST_CASE("direction_to then geodesic_step closes the gap") {
  const Manifold s = Manifold::sphere2(1.0);
  const Point p(0.7, 1.1), q(1.9, 4.0);
  const double d = s.geodesic_distance(p, q);
  const Point mid = s.geodesic_step(p, s.direction_to(p, q), d / 2);
  CHECK(s.geodesic_distance(mid, q) == doctest::Approx(d / 2).epsilon(1e-9));
  CHECK(s.geodesic_distance(p, mid) == doctest::Approx(d / 2).epsilon(1e-9));
}

TEST_CASE("unit tangent directions have unit metric norm") {
  const Manifold s = Manifold::sphere2(1.0);
  CounterRng rng({7, 1});
  const Point p(1.0, 2.0);
  for (int i = 0; i < 8; ++i) {
    const TangentDirection dir = s.sample_unit_direction(p, rng);
    const Point q = s.geodesic_step(p, dir, 1e-4);
    CHECK(s.geodesic_distance(p, q) == doctest::Approx(1e-4).epsilon(1e-6));
  }
}

TEST_CASE("chart catalogue reproduces the round sphere") {
  ChartSpec spec;
  spec.metric_name = "round_sphere";
  spec.params = {1.0};
  spec.box_lo = {0.2, 0.2};
  spec.box_hi = {2.9, 6.0};
  const Manifold chart = Manifold::chart(spec);
  const Manifold s = Manifold::sphere2(1.0);
  const Point p(1.0, 1.0), q(1.4, 1.8);
  CHECK(chart.geodesic_distance(p, q) ==
        doctest::Approx(s.geodesic_distance(p, q)).epsilon(1e-4));
}

TEST_CASE("chart geodesics that leave the box raise ChartExitError") {
  ChartSpec spec;
  spec.metric_name = "euclidean";
  spec.box_lo = {-1.0};
  spec.box_hi = {1.0};
  const Manifold chart = Manifold::chart(spec);
  const TangentDirection dir = chart.normalize_direction(Point(0.9), {1.0});
  CHECK_THROWS_AS(chart.geodesic_step(Point(0.9), dir, 0.5), ChartExitError);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(Manifold::circle(0.0), ConfigError);
  CHECK_THROWS_AS(Manifold::sphere2(-1.0), ConfigError);
  CHECK_THROWS_AS(Manifold::euclidean_space(0), ConfigError);
}
