#include "doctest.h"

#include <cmath>

#include "fkwalk/manifold.hpp"
#include "fkwalk/potential.hpp"

using namespace fkwalk;

TEST_CASE("catalogue base values") {
  CHECK(Potential::zero().base(Point(3.0)) == 0.0);
  CHECK(Potential::constant(2.5).base(Point(-1.0)) == 2.5);
  CHECK(Potential::harmonic(1.0, Point(0.0)).base(Point(0.5)) == doctest::Approx(0.125));
  CHECK(Potential::harmonic(4.0, Point(1.0)).base(Point(2.0)) == doctest::Approx(2.0));
  CHECK(Potential::gaussian_well(3.0, 0.5, Point(0.0)).base(Point(0.0)) ==
        doctest::Approx(-3.0));
  CHECK(Potential::gaussian_well(3.0, 0.5, Point(0.0)).base(Point(0.5)) ==
        doctest::Approx(-3.0 * std::exp(-0.5)));
}

TEST_CASE("table potential interpolates and clamps") {
  const Potential table = Potential::table({0.0, 1.0, 2.0}, {0.0, 2.0, 2.0});
  CHECK(table.base(Point(0.5)) == doctest::Approx(1.0));
  CHECK(table.base(Point(1.5)) == doctest::Approx(2.0));
  CHECK(table.base(Point(-4.0)) == doctest::Approx(0.0));  // clamped left
  CHECK(table.base(Point(9.0)) == doctest::Approx(2.0));   // clamped right
  CHECK_THROWS_AS(Potential::table({1.0, 1.0}, {0.0, 0.0}), ConfigError);
}

TEST_CASE("curvature coupling adds c R to the effective potential") {
  const Manifold sphere = Manifold::sphere2(2.0);
  const Potential V = Potential::constant(1.0).with_coupling(0.5);
  const Point p(1.0, 1.0);
  CHECK(V.effective(p, sphere) == doctest::Approx(1.0 + 0.5 * 2.0 / 4.0));
  // Flat space: coupling contributes nothing.
  CHECK(V.effective(Point(0.0), Manifold::euclidean_line()) == doctest::Approx(1.0));
}

TEST_CASE("describe names the potential and the coupling") {
  CHECK(Potential::zero().describe() == "zero");
  const std::string text = Potential::harmonic(1.0, Point(0.0)).with_coupling(1.0 / 6).describe();
  CHECK(text.find("harmonic") != std::string::npos);
  CHECK(text.find("R") != std::string::npos);
}

TEST_CASE("lower_bound really bounds sampled values") {
  const Potential well = Potential::gaussian_well(2.0, 1.0, Point(0.3));
  const double lb = well.lower_bound();
  for (double x = -3; x <= 3; x += 0.1) CHECK(well.base(Point(x)) >= lb - 1e-12);
}
