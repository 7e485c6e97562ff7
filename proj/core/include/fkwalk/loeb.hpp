#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fkwalk/feynman_kac.hpp"
#include "fkwalk/grid.hpp"
#include "fkwalk/oracle.hpp"

namespace fkwalk {

/// Finite sample space carrying the uniform counting measure. Populations
/// are exact 128-bit integers, enough for 2^n free paths and C(n, k) pinned
/// paths up to n = 64.
struct CountingSpace {
  unsigned __int128 population = 1;
  std::string description;

  static CountingSpace of(unsigned __int128 population, std::string description);
  /// 2^n paths of a free n-step sign walk, n <= 64.
  static CountingSpace free_paths(int n);
  /// C(n, (n+m)/2) pinned paths reaching lattice offset m, n <= 64.
  static CountingSpace pinned_paths(int n, int m);
};

/// Exact reduced fraction in [0, 1].
struct Rational {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;

  double value() const;
  std::string str() const;  // "num/den" in decimal
};

/// |A| / N, exact.
Rational counting_measure(unsigned __int128 subset_size, const CountingSpace& space);

struct LoebEstimate {
  double value = 0;
  double std_error = 0;
  long samples = 0;
  bool exact = false;
  Rational fraction;  // meaningful when exact
};

/// Path constraint: position in `box` at time `time` (snapped to the lattice).
struct LatticeBin {
  double time = 0;
  IntervalUnion box;
};

/// Exact counting-measure probability that a pinned path satisfies all bins,
/// by enumeration of the C(n, (n+m)/2) paths; n <= 20.
LoebEstimate enumerate_pinned_cylinder(double q1, double q2, const HyperfiniteGrid& grid,
                                       const std::vector<LatticeBin>& bins);

/// Monte Carlo version of the same probability over `samples` pinned paths.
LoebEstimate sample_pinned_cylinder(double q1, double q2, const HyperfiniteGrid& grid,
                                    const std::vector<LatticeBin>& bins,
                                    const EstimatorOptions& opt);

struct AndersonRow {
  long n = 0;
  double p_walk = 0;
  double std_error = 0;
  double discrepancy = 0;
  bool exact = false;
};

/// Walk-space counting probability vs normalized cylinder quadrature.
struct AndersonReport {
  double p_wiener = 0;                // cylinder_measure / free kernel mass
  AndersonRow main;
  std::vector<AndersonRow> convergence;
  double snap_distance = 0;           // max bin-time snap applied at main n
  double pass_margin = 0;             // max(3 sigma, C n^{-1/2})
  bool pass = false;
};

struct AndersonOptions {
  long samples = 100000;              // per Monte Carlo row; 0 enumerates (n <= 20)
  std::uint64_t master_seed = 0;
  int workers = 1;
  double margin_constant = 2.0;       // C in the pass rule C n^{-1/2}
  std::vector<long> convergence_ns;   // extra Monte Carlo rows
  double quadrature_tol = 1e-10;
};

AndersonReport anderson_check(double q1, double q2, double t, long n,
                              const std::vector<LatticeBin>& bins,
                              const AndersonOptions& opt);

}  // namespace fkwalk
