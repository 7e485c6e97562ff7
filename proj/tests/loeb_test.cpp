#include "doctest.h"

#include <cmath>

#include "fkwalk/loeb.hpp"

using namespace fkwalk;

TEST_CASE("counting spaces have exact populations") {
  CHECK(CountingSpace::free_paths(3).population == 8);
  const CountingSpace big = CountingSpace::free_paths(64);
  CHECK(big.population == (static_cast<unsigned __int128>(1) << 64));
  CHECK(CountingSpace::pinned_paths(4, 0).population == 6);
  CHECK(CountingSpace::pinned_paths(64, 0).population == 1832624140942590534ULL);  // C(64,32)
  CHECK_THROWS_AS(CountingSpace::free_paths(65), ResourceError);
  CHECK_THROWS_AS(CountingSpace::pinned_paths(4, 1), DomainError);
}

TEST_CASE("counting measure reduces fractions and validates the subset") {
  const CountingSpace space = CountingSpace::free_paths(4);  // 16 paths
  const Rational r = counting_measure(4, space);
  CHECK(r.str() == "1/4");
  CHECK(r.value() == doctest::Approx(0.25));
  CHECK(counting_measure(0, space).str() == "0/1");
  CHECK_THROWS_AS(counting_measure(17, space), DomainError);
}

TEST_CASE("enumerated bridge band probability matches the frozen fraction") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 16);
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::of({{-0.5, 0.5}})}};
  const LoebEstimate est = enumerate_pinned_cylinder(0.0, 0.0, grid, bins);
  CHECK(est.exact);
  CHECK(est.fraction.str() == "1862/2145");
  CHECK(est.value == doctest::Approx(1862.0 / 2145.0).epsilon(1e-15));
}

TEST_CASE("enumeration without constraints gives probability one") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 12);
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::whole_line()}};
  CHECK(enumerate_pinned_cylinder(0.0, 0.0, grid, bins).value == 1.0);
}

TEST_CASE("sampling agrees with enumeration within error bars") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 16);
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::of({{-0.5, 0.5}})}};
  const LoebEstimate exact = enumerate_pinned_cylinder(0.0, 0.0, grid, bins);
  EstimatorOptions opt;
  opt.samples = 20000;
  opt.master_seed = 4;
  opt.workers = 4;
  const LoebEstimate mc = sample_pinned_cylinder(0.0, 0.0, grid, bins, opt);
  CHECK(std::abs(mc.value - exact.value) < 4 * mc.std_error);
}

TEST_CASE("bin times snap to the nearest lattice slice") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 10);
  const IntervalUnion box = IntervalUnion::of({{-0.4, 0.4}});
  // 0.26 and 0.3 snap to the same slice, so the counts agree exactly.
  const LoebEstimate a = enumerate_pinned_cylinder(0.0, 0.0, grid, {{0.26, box}});
  const LoebEstimate b = enumerate_pinned_cylinder(0.0, 0.0, grid, {{0.3, box}});
  CHECK(a.fraction.str() == b.fraction.str());
}

TEST_CASE("enumeration limits") {
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::whole_line()}};
  CHECK_THROWS_AS(
      enumerate_pinned_cylinder(0.0, 0.0, HyperfiniteGrid::make(1.0, 22), bins),
      ResourceError);
}

TEST_CASE("walk-measure check against the cylinder quadrature") {
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::of({{-0.5, 0.5}})}};
  AndersonOptions opt;
  opt.samples = 0;  // enumerate
  const AndersonReport report = anderson_check(0.0, 0.0, 1.0, 16, bins, opt);
  CHECK(report.p_wiener == doctest::Approx(std::erf(1.0 / std::sqrt(2.0))).epsilon(1e-9));
  CHECK(report.main.exact);
  CHECK(report.main.p_walk == doctest::Approx(1862.0 / 2145.0).epsilon(1e-12));
  CHECK(report.pass_margin == doctest::Approx(2.0 / 4.0));  // C n^{-1/2}
  CHECK(report.pass);
}

TEST_CASE("monte carlo walk-measure check converges") {
  const std::vector<LatticeBin> bins{{0.5, IntervalUnion::of({{-0.5, 0.5}})}};
  AndersonOptions opt;
  opt.samples = 20000;
  opt.master_seed = 77;
  opt.workers = 4;
  const AndersonReport report = anderson_check(0.0, 0.0, 1.0, 1024, bins, opt);
  CHECK(!report.main.exact);
  // The lattice bias itself is of order n^{-1/2}, so test against the
  // C n^{-1/2} margin rather than a fixed floor.
  CHECK(report.main.discrepancy <
        std::max(4 * report.main.std_error, report.pass_margin));
  CHECK(report.pass);
}
