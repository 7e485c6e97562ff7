#include "doctest.h"

#include <cmath>

#include "fkwalk/oracle.hpp"

using namespace fkwalk;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("free line kernel closed form") {
  CHECK(free_line_kernel(0, 0, 1) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
  CHECK(free_line_kernel(0, 1, 2) ==
        doctest::Approx(std::exp(-0.25) / std::sqrt(4 * kPi)).epsilon(1e-14));
}

TEST_CASE("circle kernel integrates to one and flattens at late times") {
  const int nq = 4096;
  double mass = 0;
  for (int i = 0; i < nq; ++i)
    mass += circle_kernel(0.0, 2 * kPi * i / nq, 0.4, 1.5) * 1.5 * (2 * kPi / nq);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(circle_kernel(0.3, 2.0, 50.0, 1.0) == doctest::Approx(1 / (2 * kPi)).epsilon(1e-10));
  // Short times look like the free line locally.
  CHECK(circle_kernel(0.0, 0.2, 0.01, 1.0) ==
        doctest::Approx(free_line_kernel(0.0, 0.2, 0.01)).epsilon(1e-10));
}

TEST_CASE("sphere kernel integrates to one over the sphere") {
  const double r = 1.3, t = 0.4;
  const int nq = 2000;
  double mass = 0;
  for (int i = 0; i < nq; ++i) {
    const double g = kPi * (i + 0.5) / nq;
    mass += sphere_kernel(g, t, r) * 2 * kPi * r * r * std::sin(g) * (kPi / nq);
  }
  // Tolerance is set by the midpoint rule at this resolution, not the kernel.
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sphere kernel truncation guard") {
  double tail = 0;
  sphere_kernel(1.0, 0.3, 1.0, 50, &tail);
  CHECK(tail < 1e-10);
  // Far too few modes for a short time.
  CHECK_THROWS_AS(sphere_kernel(1.0, 0.001, 1.0, 50), TruncationError);
}

TEST_CASE("spectral harmonic ground state value at the origin") {
  const GridPropagator prop =
      spectral_kernel(-8, 8, false, Potential::harmonic(1.0, Point(0.0)), 1.0, 1024);
  const double closed = 1.0 / std::sqrt(2 * kPi * std::sinh(1.0));
  CHECK(prop.value(0.0, 0.0) == doctest::Approx(closed).epsilon(2e-3));
}

TEST_CASE("free spectral propagator rows carry unit mass away from the walls") {
  const GridPropagator prop = spectral_kernel(-8, 8, false, Potential::zero(), 0.5, 512);
  CHECK(prop.row_mass(prop.nearest(0.0)) == doctest::Approx(1.0).epsilon(1e-6));
  const GridPropagator ring = spectral_kernel(0, 2 * kPi, true, Potential::zero(), 0.5, 256);
  CHECK(ring.row_mass(32) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trotter propagator approaches the spectral one") {
  const Potential V = Potential::harmonic(1.0, Point(0.0));
  const GridPropagator spec = spectral_kernel(-6, 6, false, V, 1.0, 800);
  const GridPropagator trot = grid_trotter_kernel(-6, 6, false, V, 1.0, 64, 800);
  double dev = 0;
  for (std::size_t i = 0; i < spec.matrix.size(); ++i)
    dev = std::max(dev, std::abs(spec.matrix[i] - trot.matrix[i]));
  CHECK(dev < 2e-3);
  // Resolution precondition: the grid must resolve one slice width.
  CHECK_THROWS_AS(grid_trotter_kernel(-6, 6, false, V, 1.0, 512, 128), ConfigError);
}

TEST_CASE("interval unions normalize and measure correctly") {
  const IntervalUnion u = IntervalUnion::of({{1.0, 2.0}, {-1.0, 0.5}, {1.5, 3.0}});
  CHECK(u.parts.size() == 2);
  CHECK(u.length() == doctest::Approx(1.5 + 2.0));
  CHECK(u.contains(1.7));
  CHECK(u.contains(-1.0));
  CHECK(!u.contains(0.7));
}

TEST_CASE("cylinder measure of the whole line is the free kernel mass") {
  const CylinderSpec spec =
      CylinderSpec::make(0.0, 0.3, 1.0, {0.5}, {IntervalUnion::whole_line()});
  CHECK(cylinder_measure(spec, 1e-10) ==
        doctest::Approx(free_line_kernel(0.0, 0.3, 1.0)).epsilon(1e-8));
}

TEST_CASE("single-bin cylinder matches the gaussian bridge probability") {
  // Bridge from 0 to 0 over [0,1]; midpoint is N(0, 1/4), so the [-0.5, 0.5]
  // band has probability erf(1/sqrt(2)).
  const CylinderSpec spec =
      CylinderSpec::make(0.0, 0.0, 1.0, {0.5}, {IntervalUnion::of({{-0.5, 0.5}})});
  const double p = cylinder_measure(spec, 1e-10) / free_line_kernel(0.0, 0.0, 1.0);
  CHECK(p == doctest::Approx(std::erf(1.0 / std::sqrt(2.0))).epsilon(1e-9));
}

TEST_CASE("two-bin cylinder frozen value") {
  const CylinderSpec spec = CylinderSpec::make(
      0.0, 0.0, 1.0, {1.0 / 3, 2.0 / 3},
      {IntervalUnion::of({{-1.0, 1.0}}), IntervalUnion::of({{-1.0, 1.0}})});
  CHECK(cylinder_measure(spec, 1e-9) == doctest::Approx(0.374045534).epsilon(1e-6));
}

TEST_CASE("cylinder measure is monotone in the boxes") {
  auto measure = [](double w) {
    return cylinder_measure(
        CylinderSpec::make(0.0, 0.0, 1.0, {0.5}, {IntervalUnion::of({{-w, w}})}), 1e-9);
  };
  CHECK(measure(0.3) < measure(0.6));
  CHECK(measure(0.6) < measure(5.0));
}

TEST_CASE("cylinder spec validation") {
  CHECK_THROWS_AS(CylinderSpec::make(0, 0, 1.0, {0.5, 0.4},
                                     {IntervalUnion::whole_line(), IntervalUnion::whole_line()}),
                  ConfigError);
  const CylinderSpec five =
      CylinderSpec::make(0, 0, 1.0, {0.1, 0.2, 0.3, 0.4, 0.5},
                         std::vector<IntervalUnion>(5, IntervalUnion::whole_line()));
  CHECK_THROWS_AS(cylinder_measure(five), ConfigError);
}
