#include "doctest.h"

#include <cmath>
#include <map>

#include "fkwalk/walk.hpp"

using namespace fkwalk;

TEST_CASE("free line walk endpoint moments match Brownian scaling") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 256);
  const long samples = 20000;
  double sum = 0, sum_sq = 0;
  for (long i = 0; i < samples; ++i) {
    const double end = walk_line_stream(0.0, grid, {42, static_cast<std::uint64_t>(i)}, false,
                                        [](long, double) {});
    sum += end;
    sum_sq += end * end;
  }
  const double mean = sum / samples;
  const double var = sum_sq / samples - mean * mean;
  // 4 sigma bands: sd(mean) = 1/sqrt(N), sd(var) ~ sqrt(2/N).
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(samples)));
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / samples));
}

TEST_CASE("antithetic flip negates every increment") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 64);
  std::vector<double> a, b;
  walk_line_stream(0.0, grid, {5, 9}, false, [&](long, double x) { a.push_back(x); });
  walk_line_stream(0.0, grid, {5, 9}, true, [&](long, double x) { b.push_back(x); });
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == -b[k]);
}

TEST_CASE("sampled paths have exact step lengths and lattice times") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(2.0, 128);
  const WalkPath path = sample_line_walk(0.5, grid, {1, 2});
  REQUIRE(path.points.size() == 129);
  CHECK(path.step_length == doctest::Approx(grid.step_scale()));
  for (std::size_t k = 1; k < path.points.size(); ++k)
    CHECK(std::abs(path.points[k][0] - path.points[k - 1][0]) ==
          doctest::Approx(path.step_length));
  CHECK(path.grid.time(128) == 2.0);
}

TEST_CASE("pinned sampler hits the exact endpoint for every seed") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 64);
  PinnedLineWalkSampler sampler(0.0, 0.5, grid);
  for (std::uint64_t i = 0; i < 32; ++i) {
    double last = 0;
    sampler.run({3, i}, i % 2 == 1, [&](long, double x) { last = x; });
    CHECK(last == sampler.endpoint());
  }
}

TEST_CASE("pinned sampler is uniform over arrangements at n = 4") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 4);
  PinnedLineWalkSampler sampler(0.0, 0.0, grid);
  std::map<std::string, long> counts;
  const long samples = 12000;
  for (long i = 0; i < samples; ++i) {
    std::string pattern;
    double prev = 0;
    sampler.run({11, static_cast<std::uint64_t>(i)}, false, [&](long, double x) {
      pattern.push_back(x > prev ? 'u' : 'd');
      prev = x;
    });
    ++counts[pattern];
  }
  // 6 arrangements of 2 ups and 2 downs; each should get ~1/6.
  CHECK(counts.size() == 6);
  for (const auto& [pattern, count] : counts) {
    const double p = static_cast<double>(count) / samples;
    CHECK(std::abs(p - 1.0 / 6) < 5.0 * std::sqrt((1.0 / 6) * (5.0 / 6) / samples));
  }
}

TEST_CASE("unreachable pinned endpoints report the bracketing lattice values") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 16);  // step 0.25
  try {
    PinnedLineWalkSampler sampler(0.0, 0.3, grid);
    FAIL("expected ReachabilityError");
  } catch (const ReachabilityError& e) {
    CHECK(e.nearest_below == doctest::Approx(0.0));
    CHECK(e.nearest_above == doctest::Approx(0.5));
  }
  // Wrong parity even on the lattice.
  CHECK_THROWS_AS(PinnedLineWalkSampler(0.0, 0.25, grid), ReachabilityError);
  // Too far to reach.
  CHECK_THROWS_AS(PinnedLineWalkSampler(0.0, 5.0, grid), ReachabilityError);
}

TEST_CASE("manifold walk keeps the geodesic step length") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(0.5, 64);
  for (const Manifold& m : {Manifold::circle(1.0), Manifold::sphere2(1.0)}) {
    ManifoldWalkSampler sampler(m, m.kind() == ManifoldKind::Circle ? Point(0.0) : Point(1.0, 1.0),
                                grid);
    Point prev = m.canonicalize(m.kind() == ManifoldKind::Circle ? Point(0.0) : Point(1.0, 1.0));
    sampler.run({9, 4}, [&](long, const Point& p) {
      CHECK(m.geodesic_distance(prev, p) == doctest::Approx(sampler.step_length()).epsilon(1e-9));
      prev = p;
    });
  }
}

TEST_CASE("step length scales with the dimension") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 100);
  CHECK(manifold_step_length(Manifold::euclidean_line(), grid) == doctest::Approx(0.1));
  CHECK(manifold_step_length(Manifold::sphere2(1.0), grid) ==
        doctest::Approx(std::sqrt(2.0) * 0.1));
}

TEST_CASE("path_position interpolates inside slices and is exact on the lattice") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 16);
  const WalkPath path = sample_line_walk(0.0, grid, {2, 7});
  for (long k = 0; k <= 16; ++k)
    CHECK(path_position(path, grid.time(k))[0] == path.points[static_cast<std::size_t>(k)][0]);
  const double mid = 0.5 * (path.points[3][0] + path.points[4][0]);
  CHECK(path_position(path, (grid.time(3) + grid.time(4)) / 2)[0] == doctest::Approx(mid));
}

TEST_CASE("sphere walk endpoints spread like the heat kernel first mode") {
  const double t = 0.2;
  const HyperfiniteGrid grid = HyperfiniteGrid::make(t, 128);
  ManifoldWalkSampler sampler(Manifold::sphere2(1.0), Point(0.0, 0.0), grid);
  const long samples = 20000;
  double sum = 0;
  for (long i = 0; i < samples; ++i) {
    const Point end = sampler.run({21, static_cast<std::uint64_t>(i)}, [](long, const Point&) {});
    sum += std::cos(end[0]);
  }
  // E[cos colatitude] = cos(alpha)^n -> e^{-t}.
  CHECK(sum / samples == doctest::Approx(std::exp(-t)).epsilon(0.01));
}
