#include "fkwalk/loeb.hpp"

#include <algorithm>
#include <cmath>

#include "fkwalk/accumulate.hpp"
#include "fkwalk/walk.hpp"

namespace fkwalk {

namespace {

using U128 = unsigned __int128;

U128 gcd128(U128 a, U128 b) {
  while (b) {
    const U128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

U128 binomial128(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  U128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<U128>(n - k + i);
    c /= static_cast<U128>(i);
  }
  return c;
}

std::string u128_str(U128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

CountingSpace CountingSpace::of(U128 population, std::string description) {
  if (population == 0) throw DomainError("counting space must be nonempty");
  return CountingSpace{population, std::move(description)};
}

CountingSpace CountingSpace::free_paths(int n) {
  if (n < 0 || n > 64) throw ResourceError("exact free-path population limited to n <= 64");
  return of(U128(1) << n, "free walk paths, n=" + std::to_string(n));
}

CountingSpace CountingSpace::pinned_paths(int n, int m) {
  if (n < 1 || n > 64) throw ResourceError("exact pinned-path population limited to n <= 64");
  if (std::abs(m) > n || ((n - m) % 2) != 0)
    throw DomainError("pinned offset must satisfy |m| <= n, m = n mod 2");
  return of(binomial128(n, (n + m) / 2),
            "pinned walk paths, n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

double Rational::value() const { return static_cast<double>(num) / static_cast<double>(den); }

std::string Rational::str() const { return u128_str(num) + "/" + u128_str(den); }

Rational counting_measure(U128 subset_size, const CountingSpace& space) {
  if (subset_size > space.population)
    throw DomainError("subset larger than the counting space");
  if (subset_size == 0) return Rational{0, 1};
  const U128 g = gcd128(subset_size, space.population);
  return Rational{subset_size / g, space.population / g};
}

namespace {

struct SnappedBins {
  std::vector<long> steps;           // lattice indices, strictly increasing
  std::vector<const IntervalUnion*> boxes;
  double snap_distance = 0;
};

SnappedBins snap_bins(const std::vector<LatticeBin>& bins, const HyperfiniteGrid& grid) {
  SnappedBins out;
  long prev = 0;
  for (const auto& bin : bins) {
    long k = std::lround(bin.time / grid.epsilon);
    k = std::clamp(k, 1L, grid.slices - 1);
    if (k <= prev && !out.steps.empty())
      throw ConfigError("bin times must snap to distinct increasing lattice times");
    out.snap_distance = std::max(out.snap_distance, std::abs(bin.time - k * grid.epsilon));
    out.steps.push_back(k);
    out.boxes.push_back(&bin.box);
    prev = k;
  }
  return out;
}

// DFS over up/down prefixes with combinatorial pruning; counts paths whose
// positions satisfy every snapped bin.
U128 count_satisfying(const HyperfiniteGrid& grid, double q1, long n_up,
                      const SnappedBins& bins) {
  const double s = grid.step_scale();
  U128 count = 0;
  struct Frame {
    long k;        // steps taken
    long up;       // up steps taken
    std::size_t bin;
  };
  // Recursive lambda via explicit stack to keep it iterative and cheap.
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const long down = f.k - f.up;
    const long ups_left = n_up - f.up;
    const long downs_left = (grid.slices - n_up) - down;
    if (ups_left < 0 || downs_left < 0) continue;
    // Bin test at this depth.
    if (f.bin < bins.steps.size() && bins.steps[f.bin] == f.k) {
      const double x = q1 + static_cast<double>(2 * f.up - f.k) * s;
      if (!bins.boxes[f.bin]->contains(x)) continue;
      ++f.bin;
    }
    if (f.bin == bins.steps.size()) {
      // No constraints left: all arrangements of the remaining steps pass.
      count += binomial128(static_cast<int>(ups_left + downs_left),
                           static_cast<int>(ups_left));
      continue;
    }
    // Jump directly to the next constrained depth is possible only one step
    // at a time here; branch on the next step.
    stack.push_back({f.k + 1, f.up + 1, f.bin});
    stack.push_back({f.k + 1, f.up, f.bin});
  }
  return count;
}

}  // namespace

LoebEstimate enumerate_pinned_cylinder(double q1, double q2, const HyperfiniteGrid& grid,
                                       const std::vector<LatticeBin>& bins) {
  if (grid.slices > 20) throw ResourceError("exact enumeration limited to n <= 20");
  PinnedLineWalkSampler probe(q1, q2, grid);  // validates reachability
  const long n_up = (grid.slices + probe.endpoint_index()) / 2;
  const SnappedBins snapped = snap_bins(bins, grid);
  const U128 total = binomial128(static_cast<int>(grid.slices), static_cast<int>(n_up));
  const U128 hits = count_satisfying(grid, q1, n_up, snapped);
  const Rational frac = counting_measure(hits, CountingSpace::of(total, "pinned enumeration"));
  LoebEstimate est;
  est.value = frac.value();
  est.std_error = 0;
  est.samples = 0;
  est.exact = true;
  est.fraction = frac;
  return est;
}

LoebEstimate sample_pinned_cylinder(double q1, double q2, const HyperfiniteGrid& grid,
                                    const std::vector<LatticeBin>& bins,
                                    const EstimatorOptions& opt) {
  if (opt.samples < 2) throw ConfigError("cylinder sampling needs at least 2 samples");
  PinnedLineWalkSampler probe(q1, q2, grid);
  const SnappedBins snapped = snap_bins(bins, grid);

  auto leaves = map_leaves<MomentSums>(opt.samples, opt.workers, [&](long, long lo, long hi) {
    MomentSums acc;
    PinnedLineWalkSampler sampler(q1, q2, grid);
    for (long i = lo; i < hi; ++i) {
      bool ok = true;
      std::size_t bin = 0;
      sampler.run({opt.master_seed, static_cast<std::uint64_t>(i)}, false,
                  [&](long k, double x) {
                    if (ok && bin < snapped.steps.size() && snapped.steps[bin] == k) {
                      if (!snapped.boxes[bin]->contains(x)) ok = false;
                      ++bin;
                    }
                  });
      acc.add(ok ? 1.0 : 0.0);
    }
    return acc;
  });
  const MomentSums total = pairwise_merge(leaves, MomentSums::merged);
  LoebEstimate est;
  est.value = total.mean();
  est.std_error = total.std_error();
  est.samples = opt.samples;
  est.exact = false;
  return est;
}

AndersonReport anderson_check(double q1, double q2, double t, long n,
                              const std::vector<LatticeBin>& bins,
                              const AndersonOptions& opt) {
  AndersonReport report;
  const HyperfiniteGrid grid = HyperfiniteGrid::make(t, n);

  // Quadrature side, normalized by the total bridge mass.
  std::vector<double> times;
  std::vector<IntervalUnion> boxes;
  const SnappedBins snapped = snap_bins(bins, grid);
  report.snap_distance = snapped.snap_distance;
  for (std::size_t i = 0; i < snapped.steps.size(); ++i) {
    times.push_back(snapped.steps[i] * grid.epsilon);
    boxes.push_back(*snapped.boxes[i]);
  }
  const CylinderSpec spec = CylinderSpec::make(q1, q2, t, times, boxes);
  report.p_wiener =
      cylinder_measure(spec, opt.quadrature_tol) / free_line_kernel(q1, q2, t);

  auto run_row = [&](long row_n) {
    const HyperfiniteGrid g = HyperfiniteGrid::make(t, row_n);
    AndersonRow row;
    row.n = row_n;
    if (opt.samples == 0) {
      const LoebEstimate e = enumerate_pinned_cylinder(q1, q2, g, bins);
      row.p_walk = e.value;
      row.std_error = 0;
      row.exact = true;
    } else {
      EstimatorOptions eo;
      eo.samples = opt.samples;
      eo.master_seed = opt.master_seed;
      eo.workers = opt.workers;
      const LoebEstimate e = sample_pinned_cylinder(q1, q2, g, bins, eo);
      row.p_walk = e.value;
      row.std_error = e.std_error;
    }
    row.discrepancy = std::abs(row.p_walk - report.p_wiener);
    return row;
  };

  report.main = run_row(n);
  for (long cn : opt.convergence_ns) report.convergence.push_back(run_row(cn));
  report.pass_margin = std::max(3 * report.main.std_error,
                                opt.margin_constant / std::sqrt(static_cast<double>(n)));
  report.pass = report.main.discrepancy <= report.pass_margin;
  return report;
}

}  // namespace fkwalk
