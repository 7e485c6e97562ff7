#include <benchmark/benchmark.h>

#include "fkwalk/feynman_kac.hpp"
#include "fkwalk/hfset.hpp"
#include "fkwalk/walk.hpp"

using namespace fkwalk;

static void BM_LineWalk(benchmark::State& state) {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(walk_line_stream(0.0, grid, {1, i++}, false, [](long, double) {}));
  }
  state.SetItemsProcessed(state.iterations() * grid.slices);
}
BENCHMARK(BM_LineWalk)->Arg(256)->Arg(2048);

static void BM_PinnedWalk(benchmark::State& state) {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, state.range(0));
  PinnedLineWalkSampler sampler(0.0, 0.0, grid);
  std::uint64_t i = 0;
  double sink = 0;
  for (auto _ : state) {
    sampler.run({1, i++}, false, [&](long, double x) { sink += x; });
    benchmark::DoNotOptimize(sink);
  }
  state.SetItemsProcessed(state.iterations() * grid.slices);
}
BENCHMARK(BM_PinnedWalk)->Arg(256)->Arg(2048);

static void BM_SphereWalk(benchmark::State& state) {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(0.3, state.range(0));
  ManifoldWalkSampler sampler(Manifold::sphere2(1.0), Point(1.0, 1.0), grid);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.run({1, i++}, [](long, const Point&) {}));
  }
  state.SetItemsProcessed(state.iterations() * grid.slices);
}
BENCHMARK(BM_SphereWalk)->Arg(256)->Arg(512);

static void BM_BridgeEstimator(benchmark::State& state) {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 256);
  const Potential V = Potential::harmonic(1.0, Point(0.0));
  EstimatorOptions opt;
  opt.samples = state.range(0);
  opt.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_kernel_line_bridge(0.0, 0.0, grid, V, opt));
  }
  state.SetItemsProcessed(state.iterations() * opt.samples * grid.slices);
}
BENCHMARK(BM_BridgeEstimator)->Args({10000, 1})->Args({10000, 8});

static void BM_HfsNatural(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(von_neumann_natural(static_cast<int>(state.range(0)))));
  }
}
BENCHMARK(BM_HfsNatural)->Arg(8)->Arg(12);

static void BM_HfsArithmetic(benchmark::State& state) {
  const HFSet a = von_neumann_natural(3), b = von_neumann_natural(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nat_mul(a, b));
  }
}
BENCHMARK(BM_HfsArithmetic);

BENCHMARK_MAIN();
