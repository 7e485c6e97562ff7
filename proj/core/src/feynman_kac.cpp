#include "fkwalk/feynman_kac.hpp"

#include <cmath>

#include "fkwalk/accumulate.hpp"
#include "fkwalk/oracle.hpp"
#include "quadrature.hpp"

namespace fkwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Effective potential V + cR; constant-curvature manifolds evaluate the
// curvature term once.
class EffPotential {
 public:
  EffPotential(const Potential& V, const Manifold& m) : v_(V), m_(m) {
    const double c = V.curvature_coupling();
    if (c == 0.0) {
      mode_ = Mode::BaseOnly;
    } else if (m.kind() == ManifoldKind::Chart) {
      mode_ = Mode::PerPoint;
    } else {
      mode_ = Mode::ConstantShift;
      Point probe(std::vector<double>(static_cast<std::size_t>(m.dimension()), 0.0));
      if (m.kind() == ManifoldKind::Sphere2) probe = Point(kPi / 2, 0.0);
      if (m.kind() == ManifoldKind::HyperbolicPlane) probe = Point(0.0, 1.0);
      shift_ = c * m.scalar_curvature(probe);
    }
  }

  double operator()(const Point& p) const {
    switch (mode_) {
      case Mode::BaseOnly: return v_.base(p);
      case Mode::ConstantShift: return v_.base(p) + shift_;
      case Mode::PerPoint: return v_.effective(p, m_);
    }
    return 0;
  }

  double operator()(double x) const { return (*this)(Point(x)); }

 private:
  enum class Mode { BaseOnly, ConstantShift, PerPoint };
  const Potential& v_;
  const Manifold& m_;
  Mode mode_ = Mode::BaseOnly;
  double shift_ = 0;
};

// Streaming action sum; feed the visited endpoints in order.
struct ActionSum {
  bool trapezoidal;
  double start_value = 0;  // V_eff at the walk start, for the trapezoidal rule
  double sum = 0;
  double last = 0;

  void begin(double v0) {
    sum = 0;
    last = v0;
  }
  void add(double v) {
    sum += trapezoidal ? 0.5 * (last + v) : v;
    last = v;
  }
  double weight(double epsilon) const { return std::exp(-epsilon * sum); }
};

KernelEstimate finish(const std::vector<MomentSums>& leaves, const HyperfiniteGrid& grid,
                      const char* method, double scale, long paths) {
  const MomentSums total = pairwise_merge(leaves, MomentSums::merged);
  KernelEstimate est;
  est.value = scale * total.mean();
  est.std_error = scale * total.std_error();
  est.samples = paths;
  est.grid = grid;
  est.method = method;
  return est;
}

}  // namespace

double action_weight(const WalkPath& path, const Potential& V, bool trapezoidal) {
  EffPotential veff(V, path.manifold);
  ActionSum action{trapezoidal};
  action.begin(trapezoidal ? veff(path.points.front()) : 0.0);
  for (std::size_t k = 1; k < path.points.size(); ++k) {
    const double v = veff(path.points[k]);
    if (!std::isfinite(v))
      throw NumericalError("potential non-finite at path step " + std::to_string(k));
    action.add(v);
  }
  return action.weight(path.grid.epsilon);
}

KernelEstimate estimate_semigroup_apply(const Manifold& m, const Potential& V,
                                        const std::function<double(const Point&)>& f,
                                        const Point& q1, const HyperfiniteGrid& grid,
                                        const EstimatorOptions& opt) {
  if (opt.samples < 2) throw ConfigError("estimator needs at least 2 samples");
  EffPotential veff(V, m);
  const bool line = m.kind() == ManifoldKind::EuclideanLine;
  const bool paired = opt.antithetic && line;
  long paths = opt.samples;
  if (paired && paths % 2) ++paths;

  std::vector<MomentSums> leaves;
  if (line) {
    const Point start = m.canonicalize(q1);
    const double v0 = veff(start);
    leaves = map_leaves<MomentSums>(paths, opt.workers, [&](long, long lo, long hi) {
      MomentSums acc;
      ActionSum action{opt.trapezoidal};
      double pending = 0;
      for (long i = lo; i < hi; ++i) {
        action.begin(v0);
        const SeedSpec seed{opt.master_seed, static_cast<std::uint64_t>(paired ? i >> 1 : i)};
        double end = walk_line_stream(start[0], grid, seed, paired && (i & 1),
                                      [&](long, double x) { action.add(veff(x)); });
        const double obs = action.weight(grid.epsilon) * f(Point(end));
        if (paired) {
          if (i & 1)
            acc.add(0.5 * (pending + obs));
          else
            pending = obs;
        } else {
          acc.add(obs);
        }
      }
      return acc;
    });
  } else {
    ManifoldWalkSampler sampler(m, q1, grid);
    const double v0 = veff(sampler.manifold().canonicalize(q1));
    leaves = map_leaves<MomentSums>(paths, opt.workers, [&](long, long lo, long hi) {
      MomentSums acc;
      ActionSum action{opt.trapezoidal};
      for (long i = lo; i < hi; ++i) {
        action.begin(v0);
        const Point end = sampler.run({opt.master_seed, static_cast<std::uint64_t>(i)},
                                      [&](long, const Point& p) { action.add(veff(p)); });
        acc.add(action.weight(grid.epsilon) * f(end));
      }
      return acc;
    });
  }
  return finish(leaves, grid, "semigroup", 1.0, paths);
}

KernelEstimate estimate_kernel_line_bridge(double q1, double q2, const HyperfiniteGrid& grid,
                                           const Potential& V, const EstimatorOptions& opt) {
  if (opt.samples < 2) throw ConfigError("estimator needs at least 2 samples");
  PinnedLineWalkSampler probe(q1, q2, grid);  // validates reachability up front
  const double k0 = free_line_kernel(q1, probe.endpoint(), grid.horizon);
  const Manifold line = Manifold::euclidean_line();
  EffPotential veff(V, line);
  const double v0 = veff(q1);
  const bool paired = opt.antithetic;
  long paths = opt.samples;
  if (paired && paths % 2) ++paths;

  auto leaves = map_leaves<MomentSums>(paths, opt.workers, [&](long, long lo, long hi) {
    MomentSums acc;
    PinnedLineWalkSampler sampler(q1, q2, grid);
    ActionSum action{opt.trapezoidal};
    double pending = 0;
    for (long i = lo; i < hi; ++i) {
      action.begin(v0);
      const SeedSpec seed{opt.master_seed, static_cast<std::uint64_t>(paired ? i >> 1 : i)};
      sampler.run(seed, paired && (i & 1), [&](long, double x) { action.add(veff(x)); });
      const double w = action.weight(grid.epsilon);
      if (paired) {
        if (i & 1)
          acc.add(0.5 * (pending + w));
        else
          pending = w;
      } else {
        acc.add(w);
      }
    }
    return acc;
  });
  return finish(leaves, grid, "bridge", k0, paths);
}

double default_bin_radius(const HyperfiniteGrid& grid, long samples) {
  return 0.4 * std::sqrt(grid.horizon) * std::pow(static_cast<double>(samples), -0.2);
}

std::vector<KernelEstimate> estimate_kernel_binned_multi(
    const Manifold& m, const Point& q1, const std::vector<Point>& q2s,
    const HyperfiniteGrid& grid, const Potential& V, double bin_radius,
    const EstimatorOptions& opt) {
  if (opt.samples < 2) throw ConfigError("estimator needs at least 2 samples");
  if (!(bin_radius > 0)) throw ConfigError("bin radius must be positive");
  if (q2s.empty()) throw ConfigError("binned estimator needs at least one target");
  if ((m.kind() == ManifoldKind::Circle || m.kind() == ManifoldKind::Sphere2) &&
      bin_radius >= kPi * m.radius())
    throw ConfigError("bin radius must stay below the injectivity radius");
  std::vector<Point> targets;
  std::vector<double> volumes;
  for (const Point& q2 : q2s) {
    targets.push_back(m.canonicalize(q2));
    volumes.push_back(m.ball_volume(targets.back(), bin_radius).value);
  }
  EffPotential veff(V, m);
  ManifoldWalkSampler sampler(m, q1, grid);
  const double v0 = veff(m.canonicalize(q1));

  using Sums = std::vector<MomentSums>;
  auto leaves = map_leaves<Sums>(opt.samples, opt.workers, [&](long, long lo, long hi) {
    Sums acc(targets.size());
    ActionSum action{opt.trapezoidal};
    for (long i = lo; i < hi; ++i) {
      action.begin(v0);
      const Point end = sampler.run({opt.master_seed, static_cast<std::uint64_t>(i)},
                                    [&](long, const Point& p) { action.add(veff(p)); });
      const double w = action.weight(grid.epsilon);
      for (std::size_t j = 0; j < targets.size(); ++j) {
        const bool hit = m.geodesic_distance(end, targets[j]) <= bin_radius;
        acc[j].add(hit ? w : 0.0);
      }
    }
    return acc;
  });
  std::vector<KernelEstimate> out;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::vector<MomentSums> per_target;
    per_target.reserve(leaves.size());
    for (const Sums& leaf : leaves) per_target.push_back(leaf[j]);
    const MomentSums total = pairwise_merge(per_target, MomentSums::merged);
    if (total.sum == 0.0)
      throw DegenerateEstimateError(
          "no sample landed in a target bin; enlarge the bin or add samples");
    KernelEstimate est = finish(per_target, grid, "binned", 1.0 / volumes[j], opt.samples);
    est.bin_radius = bin_radius;
    out.push_back(est);
  }
  return out;
}

KernelEstimate estimate_kernel_binned(const Manifold& m, const Point& q1, const Point& q2,
                                      const HyperfiniteGrid& grid, const Potential& V,
                                      double bin_radius, const EstimatorOptions& opt) {
  return estimate_kernel_binned_multi(m, q1, {q2}, grid, V, bin_radius, opt)[0];
}

double estimate_binned_normalization(const Manifold& m, const Point& q1,
                                     const HyperfiniteGrid& grid, const Potential& V,
                                     double bin_radius, const EstimatorOptions& opt) {
  if (!(bin_radius > 0)) throw ConfigError("bin radius must be positive");
  const bool line = m.kind() == ManifoldKind::EuclideanLine;
  const bool circle = m.kind() == ManifoldKind::Circle;
  if (!line && !circle)
    throw ConfigError("binned normalization check supports the line and the circle");

  // Uniform centers spaced at 2 rho / 5: each endpoint covers about 5 cells,
  // so the quadrature of the overlapping-ball estimates integrates every
  // sample with weight close to 1.
  const double h = 2 * bin_radius / 5;
  double lo, span;
  if (line) {
    const double reach = 8 * std::sqrt(grid.horizon) + bin_radius;
    lo = q1[0] - reach;
    span = 2 * reach;
  } else {
    lo = 0;
    span = 2 * kPi * m.radius();
  }
  const long cells = static_cast<long>(std::ceil(span / h));
  EffPotential veff(V, m);
  ManifoldWalkSampler sampler(m, q1, grid);
  const double v0 = veff(m.canonicalize(q1));

  auto leaves =
      map_leaves<std::vector<double>>(opt.samples, opt.workers, [&](long, long b, long e) {
        std::vector<double> hist(static_cast<std::size_t>(cells), 0.0);
        ActionSum action{opt.trapezoidal};
        for (long i = b; i < e; ++i) {
          action.begin(v0);
          const Point end = sampler.run({opt.master_seed, static_cast<std::uint64_t>(i)},
                                        [&](long, const Point& p) { action.add(veff(p)); });
          const double w = action.weight(grid.epsilon);
          const double x = circle ? end[0] * m.radius() : end[0];
          // All centers within bin_radius of the endpoint.
          const long j_lo = static_cast<long>(std::ceil((x - bin_radius - lo) / h));
          const long j_hi = static_cast<long>(std::floor((x + bin_radius - lo) / h));
          for (long j = j_lo; j <= j_hi; ++j) {
            const long jj = circle ? ((j % cells) + cells) % cells : j;
            if (jj >= 0 && jj < cells) hist[static_cast<std::size_t>(jj)] += w;
          }
        }
        return hist;
      });
  const std::vector<double> hist =
      pairwise_merge(leaves, [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
      });
  double integral = 0;
  for (double c : hist) integral += c / (2 * bin_radius) * h;
  return integral / static_cast<double>(opt.samples);
}

namespace {

struct QuadNodes {
  std::vector<Point> points;
  std::vector<double> weights;  // include the Riemannian measure
};

QuadNodes quad_nodes(const Manifold& m, const QuadratureSpec& spec) {
  if (spec.points < 16) throw ConfigError("quadrature needs at least 16 points");
  QuadNodes out;
  switch (m.kind()) {
    case ManifoldKind::EuclideanLine: {
      if (!(spec.hi > spec.lo))
        throw ConfigError("line quadrature needs a covering interval lo < hi");
      std::vector<double> xs, ws;
      const int segments = std::max(1, static_cast<int>(spec.points / 16));
      detail::gl16_composite(spec.lo, spec.hi, segments, xs, ws);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out.points.emplace_back(xs[i]);
        out.weights.push_back(ws[i]);
      }
      return out;
    }
    case ManifoldKind::Circle: {
      const long n = spec.points;
      const double dth = 2 * kPi / n;
      for (long i = 0; i < n; ++i) {
        out.points.emplace_back(i * dth);
        out.weights.push_back(m.radius() * dth);
      }
      return out;
    }
    case ManifoldKind::Sphere2: {
      std::vector<double> cs, ws;
      const int segments = std::max(2, static_cast<int>(spec.points / 64));
      detail::gl16_composite(0, kPi, segments, cs, ws);
      const int lons = 64;
      const double dphi = 2 * kPi / lons;
      const double r2 = m.radius() * m.radius();
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (int j = 0; j < lons; ++j) {
          out.points.emplace_back(cs[i], j * dphi);
          out.weights.push_back(r2 * std::sin(cs[i]) * ws[i] * dphi);
        }
      return out;
    }
    default:
      throw ConfigError("kernel verification quadrature supports line, circle, sphere");
  }
}

}  // namespace

KernelPropertyReport verify_kernel_properties(const KernelFn& kernel, const Manifold& m,
                                              double t1, double t2,
                                              const QuadratureSpec& quad, double tolerance) {
  if (!(t1 > 0) || !(t2 > 0)) throw DomainError("verification times must be positive");
  if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
  const QuadNodes nodes = quad_nodes(m, quad);
  const std::size_t n = nodes.points.size();
  const std::vector<std::size_t> bases = {n / 5, n / 2, (4 * n) / 5};

  KernelPropertyReport report;
  report.min_value = kernel(nodes.points[bases[0]], nodes.points[bases[0]], t1);
  for (std::size_t b : bases) {
    double mass = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double k = kernel(nodes.points[b], nodes.points[i], t1);
      report.min_value = std::min(report.min_value, k);
      mass += nodes.weights[i] * k;
    }
    report.normalization_residual =
        std::max(report.normalization_residual, std::abs(mass - 1.0));
  }
  for (std::size_t a : bases) {
    std::vector<double> left(n);
    for (std::size_t i = 0; i < n; ++i) left[i] = kernel(nodes.points[a], nodes.points[i], t1);
    for (std::size_t b : bases) {
      double composed = 0;
      for (std::size_t i = 0; i < n; ++i)
        composed += nodes.weights[i] * left[i] * kernel(nodes.points[i], nodes.points[b], t2);
      const double direct = kernel(nodes.points[a], nodes.points[b], t1 + t2);
      report.semigroup_residual =
          std::max(report.semigroup_residual, std::abs(direct - composed));
    }
  }
  report.positive = report.min_value > 0;
  report.normalized = report.normalization_residual <= tolerance;
  report.semigroup = report.semigroup_residual <= tolerance;
  return report;
}

}  // namespace fkwalk
