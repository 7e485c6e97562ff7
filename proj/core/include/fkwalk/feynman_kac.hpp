#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "fkwalk/grid.hpp"
#include "fkwalk/manifold.hpp"
#include "fkwalk/potential.hpp"
#include "fkwalk/walk.hpp"

namespace fkwalk {

struct KernelEstimate {
  double value = 0;
  double std_error = 0;
  long samples = 0;
  HyperfiniteGrid grid;
  std::string method;  // bridge | binned | semigroup
  std::optional<double> bin_radius;
};

struct EstimatorOptions {
  long samples = 10000;
  std::uint64_t master_seed = 0;
  int workers = 1;
  /// Paired variance reduction on the line (sign flip for free walks,
  /// step reversal for bridges); ignored on manifolds of dimension >= 2.
  bool antithetic = true;
  /// Trapezoidal instead of right-endpoint rule for the action sum.
  bool trapezoidal = false;
};

/// exp(-sum_k eps * V_eff(omega(t_k))), right-endpoint rule over k = 1..n
/// (trapezoidal averages consecutive endpoint contributions instead).
double action_weight(const WalkPath& path, const Potential& V, bool trapezoidal = false);

/// Sampled (exp(-t H) f)(q1) over free walks: mean of action_weight times
/// f at the endpoint.
KernelEstimate estimate_semigroup_apply(const Manifold& m, const Potential& V,
                                        const std::function<double(const Point&)>& f,
                                        const Point& q1, const HyperfiniteGrid& grid,
                                        const EstimatorOptions& opt);

/// Pinned-bridge kernel on the line: closed-form free kernel times the mean
/// action weight over uniformly sampled pinned paths. Exact for V = 0.
KernelEstimate estimate_kernel_line_bridge(double q1, double q2, const HyperfiniteGrid& grid,
                                           const Potential& V, const EstimatorOptions& opt);

/// Endpoint-binned kernel on a manifold: weighted hit fraction of the
/// geodesic ball around q2, divided by the ball volume.
KernelEstimate estimate_kernel_binned(const Manifold& m, const Point& q1, const Point& q2,
                                      const HyperfiniteGrid& grid, const Potential& V,
                                      double bin_radius, const EstimatorOptions& opt);

/// Same estimator evaluated at several targets from one endpoint pass.
/// Element i is identical to estimate_kernel_binned at q2s[i].
std::vector<KernelEstimate> estimate_kernel_binned_multi(
    const Manifold& m, const Point& q1, const std::vector<Point>& q2s,
    const HyperfiniteGrid& grid, const Potential& V, double bin_radius,
    const EstimatorOptions& opt);

/// Kernel-density style default: 0.4 sqrt(t) samples^(-1/5).
double default_bin_radius(const HyperfiniteGrid& grid, long samples);

/// Monte Carlo normalization of the binned estimator: tiles the reachable
/// range with bin-sized cells in one endpoint pass and integrates the
/// piecewise-constant estimate. Returns the integral (1 when exact).
double estimate_binned_normalization(const Manifold& m, const Point& q1,
                                     const HyperfiniteGrid& grid, const Potential& V,
                                     double bin_radius, const EstimatorOptions& opt);

/// Quadrature used by verify_kernel_properties. Line kernels integrate over
/// [lo, hi]; compact manifolds use their full volume and ignore lo/hi.
struct QuadratureSpec {
  long points = 512;
  double lo = 0, hi = 0;
};

struct KernelPropertyReport {
  bool positive = false;
  bool normalized = false;
  bool semigroup = false;
  double min_value = 0;
  double normalization_residual = 0;
  double semigroup_residual = 0;
  bool pass() const { return positive && normalized && semigroup; }
};

using KernelFn = std::function<double(const Point&, const Point&, double)>;

/// Checks positivity, unit mass of K_t1(p, .) d mu_g, and the composition
/// identity K_{t1+t2} = integral of K_t1 K_t2, reporting measured residuals.
KernelPropertyReport verify_kernel_properties(const KernelFn& kernel, const Manifold& m,
                                              double t1, double t2,
                                              const QuadratureSpec& quad, double tolerance);

}  // namespace fkwalk
