#include "doctest.h"

#include <cmath>

#include "fkwalk/feynman_kac.hpp"
#include "fkwalk/oracle.hpp"

using namespace fkwalk;

namespace {
constexpr double kPi = 3.14159265358979323846;

WalkPath make_line_path(const HyperfiniteGrid& grid, std::vector<double> xs) {
  WalkPath path{grid, Manifold::euclidean_line(), {}, grid.step_scale()};
  for (double x : xs) path.points.emplace_back(x);
  return path;
}
}  // namespace

TEST_CASE("action weight by hand on a two-step path") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 2);
  const double s = grid.step_scale();
  const WalkPath path = make_line_path(grid, {0.0, s, 0.0});
  const Potential V = Potential::harmonic(1.0, Point(0.0));
  // Right endpoints: eps * (V(s) + V(0)) = 0.5 * (0.25 + 0) = 1/8.
  CHECK(action_weight(path, V) == doctest::Approx(std::exp(-0.125)).epsilon(1e-14));
  // Trapezoidal on an up-up path differs from the right-endpoint rule.
  const WalkPath up = make_line_path(grid, {0.0, s, 2 * s});
  CHECK(action_weight(up, V) == doctest::Approx(std::exp(-0.625)).epsilon(1e-13));
  CHECK(action_weight(up, V, true) == doctest::Approx(std::exp(-0.375)).epsilon(1e-13));
}

TEST_CASE("free bridge reproduces the gaussian kernel with zero variance") {
  EstimatorOptions opt;
  opt.samples = 500;
  const KernelEstimate est = estimate_kernel_line_bridge(
      0.2, 0.2, HyperfiniteGrid::make(1.0, 128), Potential::zero(), opt);
  CHECK(est.value == free_line_kernel(0.2, 0.2, 1.0));
  CHECK(est.std_error == 0.0);
  CHECK(est.method == "bridge");
}

TEST_CASE("constant potentials shift the bridge by an exact exponential") {
  EstimatorOptions opt;
  opt.samples = 2000;
  opt.master_seed = 8;
  const HyperfiniteGrid grid = HyperfiniteGrid::make(0.7, 128);
  const KernelEstimate est =
      estimate_kernel_line_bridge(0.0, 0.0, grid, Potential::constant(1.3), opt);
  CHECK(est.value ==
        doctest::Approx(free_line_kernel(0, 0, 0.7) * std::exp(-1.3 * 0.7)).epsilon(1e-13));
}

TEST_CASE("harmonic bridge agrees with the spectral oracle") {
  EstimatorOptions opt;
  opt.samples = 20000;
  opt.master_seed = 17;
  opt.workers = 4;
  const KernelEstimate est = estimate_kernel_line_bridge(
      0.0, 0.0, HyperfiniteGrid::make(1.0, 256), Potential::harmonic(1.0, Point(0.0)), opt);
  const double oracle = 0.368006;  // dense-diagonalization value, frozen
  CHECK(std::abs(est.value - oracle) < std::max(4 * est.std_error, 0.01 * oracle));
  CHECK(1.0 / std::sqrt(2 * kPi * std::sinh(1.0)) == doctest::Approx(oracle).epsilon(2e-4));
}

TEST_CASE("estimates are bit-identical across worker counts") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 64);  // 0.5 is on the lattice
  const Potential V = Potential::harmonic(1.0, Point(0.0));
  EstimatorOptions a, b;
  a.samples = b.samples = 10000;
  a.master_seed = b.master_seed = 33;
  a.workers = 1;
  b.workers = 5;
  const KernelEstimate ea = estimate_kernel_line_bridge(0, 0.5, grid, V, a);
  const KernelEstimate eb = estimate_kernel_line_bridge(0, 0.5, grid, V, b);
  CHECK(ea.value == eb.value);
  CHECK(ea.std_error == eb.std_error);

  const KernelEstimate ba =
      estimate_kernel_binned(Manifold::circle(1.0), Point(0.0), Point(1.0),
                             HyperfiniteGrid::make(0.5, 128), V, 0.2, a);
  const KernelEstimate bb =
      estimate_kernel_binned(Manifold::circle(1.0), Point(0.0), Point(1.0),
                             HyperfiniteGrid::make(0.5, 128), V, 0.2, b);
  CHECK(ba.value == bb.value);
  CHECK(ba.std_error == bb.std_error);
}

TEST_CASE("semigroup applied to the constant observable has unit mean for V = 0") {
  EstimatorOptions opt;
  opt.samples = 1000;
  const KernelEstimate est = estimate_semigroup_apply(
      Manifold::euclidean_line(), Potential::zero(), [](const Point&) { return 1.0; },
      Point(0.0), HyperfiniteGrid::make(1.0, 64), opt);
  CHECK(est.value == 1.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("binned line estimate matches the free kernel") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 256);
  EstimatorOptions opt;
  opt.samples = 100000;
  opt.master_seed = 3;
  opt.workers = 4;
  const KernelEstimate est =
      estimate_kernel_binned(Manifold::euclidean_line(), Point(0.0), Point(0.0), grid,
                             Potential::zero(), grid.step_scale(), opt);
  const double oracle = free_line_kernel(0, 0, 1);
  CHECK(std::abs(est.value - oracle) < std::max(4 * est.std_error, 0.03 * oracle));
  CHECK(est.bin_radius.value() == grid.step_scale());
}

TEST_CASE("multi-target binned estimates equal the single-target ones") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 64);
  const double s = grid.step_scale();
  EstimatorOptions opt;
  opt.samples = 20000;
  opt.master_seed = 12;
  const std::vector<Point> targets{Point(0.0), Point(2 * s), Point(8 * s)};
  const auto multi = estimate_kernel_binned_multi(Manifold::euclidean_line(), Point(0.0),
                                                  targets, grid, Potential::zero(), s, opt);
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const KernelEstimate single = estimate_kernel_binned(
        Manifold::euclidean_line(), Point(0.0), targets[j], grid, Potential::zero(), s, opt);
    CHECK(multi[j].value == single.value);
    CHECK(multi[j].std_error == single.std_error);
  }
}

TEST_CASE("empty bins raise a degenerate-estimate error") {
  EstimatorOptions opt;
  opt.samples = 100;
  CHECK_THROWS_AS(
      estimate_kernel_binned(Manifold::euclidean_line(), Point(0.0), Point(50.0),
                             HyperfiniteGrid::make(1.0, 64), Potential::zero(), 0.01, opt),
      DegenerateEstimateError);
}

TEST_CASE("default bin radius follows the density-estimation rule") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(4.0, 64);
  CHECK(default_bin_radius(grid, 100000) == doctest::Approx(0.4 * 2.0 * 0.1));
}

TEST_CASE("binned normalization integrates to about one") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 256);
  EstimatorOptions opt;
  opt.samples = 20000;
  opt.master_seed = 5;
  opt.workers = 4;
  const double mass = estimate_binned_normalization(
      Manifold::euclidean_line(), Point(0.0), grid, Potential::zero(),
      default_bin_radius(grid, opt.samples), opt);
  CHECK(mass == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("kernel property verification accepts the free kernel and rejects a scaled one") {
  const KernelFn good = [](const Point& p, const Point& q, double t) {
    return free_line_kernel(p[0], q[0], t);
  };
  const KernelFn scaled = [&](const Point& p, const Point& q, double t) {
    return 1.1 * free_line_kernel(p[0], q[0], t);
  };
  const QuadratureSpec quad{1024, -10, 10};
  CHECK(verify_kernel_properties(good, Manifold::euclidean_line(), 0.5, 0.5, quad, 1e-6).pass());
  const KernelPropertyReport bad =
      verify_kernel_properties(scaled, Manifold::euclidean_line(), 0.5, 0.5, quad, 1e-6);
  CHECK(!bad.normalized);
  CHECK(!bad.pass());
}

TEST_CASE("estimator option validation") {
  EstimatorOptions opt;
  opt.samples = 1;
  CHECK_THROWS_AS(estimate_kernel_line_bridge(0, 0, HyperfiniteGrid::make(1.0, 16),
                                              Potential::zero(), opt),
                  ConfigError);
  opt.samples = 100;
  CHECK_THROWS_AS(
      estimate_kernel_binned(Manifold::circle(1.0), Point(0.0), Point(1.0),
                             HyperfiniteGrid::make(1.0, 16), Potential::zero(), 4.0, opt),
      ConfigError);  // bin exceeds the injectivity radius
}
