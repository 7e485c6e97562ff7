#include "fkwalk/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "quadrature.hpp"

namespace fkwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void gl_nodes(double a, double b, int segments, std::vector<double>& xs,
              std::vector<double>& ws) {
  detail::gl16_composite(a, b, segments, xs, ws);
}

}  // namespace

double free_line_kernel(double q1, double q2, double t) {
  if (!(t > 0)) throw DomainError("free kernel needs t > 0");
  const double d = q2 - q1;
  return std::exp(-d * d / (2 * t)) / std::sqrt(2 * kPi * t);
}

double circle_kernel(double theta1, double theta2, double t, double r, double tol) {
  if (!(t > 0) || !(r > 0)) throw DomainError("circle kernel needs t > 0, r > 0");
  const double circumference = 2 * kPi * r;
  // Arc-length difference reduced to the nearest image.
  double d = std::remainder(r * (theta2 - theta1), circumference);
  double total = 0;
  for (int m = 0;; ++m) {
    const double plus = free_line_kernel(0, d + m * circumference, t);
    const double minus = m == 0 ? 0.0 : free_line_kernel(0, d - m * circumference, t);
    total += plus + minus;
    if (m >= 1 && plus < tol && minus < tol) break;
  }
  return total;
}

double sphere_kernel(double gamma, double t, double r, int l_max, double* tail_bound) {
  if (!(t > 0) || !(r > 0)) throw DomainError("sphere kernel needs t > 0, r > 0");
  if (l_max < 1) throw DomainError("sphere kernel needs l_max >= 1");
  const double tau = t / (2 * r * r);
  const double x = std::cos(gamma);
  double p_prev = 1.0, p_curr = x;  // P_0, P_1
  double total = std::exp(0.0) * 1.0;
  total += 3.0 * std::exp(-2.0 * tau) * p_curr;
  for (int l = 2; l <= l_max; ++l) {
    const double p_next = ((2 * l - 1) * x * p_curr - (l - 1) * p_prev) / l;
    p_prev = p_curr;
    p_curr = p_next;
    total += (2 * l + 1) * std::exp(-static_cast<double>(l) * (l + 1) * tau) * p_curr;
  }
  // |P_l| <= 1, terms eventually decreasing: first omitted term plus the
  // integral of (2l+1) e^{-l(l+1) tau} beyond l_max.
  const double l1 = l_max + 1;
  const double tail =
      ((2 * l1 + 1) + 1.0 / tau) * std::exp(-l1 * (l1 + 1) * tau) / (4 * kPi * r * r);
  if (tail_bound) *tail_bound = tail;
  if (tail > 1e-10)
    throw TruncationError("sphere kernel tail bound above 1e-10; increase l_max");
  return total / (4 * kPi * r * r);
}

std::size_t GridPropagator::nearest(double q) const {
  if (periodic) {
    const double span = b - a;
    double u = std::fmod(q - a, span);
    if (u < 0) u += span;
    const auto i = static_cast<std::size_t>(std::llround(u / spacing));
    return i % size;
  }
  const long i = std::lround((q - a) / spacing);
  return static_cast<std::size_t>(std::clamp(i, 0L, static_cast<long>(size) - 1));
}

double GridPropagator::row_mass(std::size_t i) const {
  double s = 0;
  for (std::size_t j = 0; j < size; ++j) s += at(i, j);
  return s * spacing;
}

namespace {

// Uniform grid over [a, b]; periodic grids omit the duplicate right endpoint.
void build_grid(double a, double b, bool periodic, std::size_t n, GridPropagator& out) {
  if (!(b > a)) throw ConfigError("grid interval must have b > a");
  if (n < 64) throw ConfigError("grid needs at least 64 points");
  out.a = a;
  out.b = b;
  out.periodic = periodic;
  out.size = n;
  out.spacing = (b - a) / (periodic ? n : n - 1);
  out.grid.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.grid[i] = a + i * out.spacing;
}

// Geometer-positive second-difference Laplacian.
Eigen::MatrixXd laplacian_matrix(std::size_t n, double h, bool periodic) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  const double inv_h2 = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    L(i, i) = 2 * inv_h2;
    if (i + 1 < n) {
      L(i, i + 1) = -inv_h2;
      L(i + 1, i) = -inv_h2;
    }
  }
  if (periodic) {
    L(0, n - 1) = -inv_h2;
    L(n - 1, 0) = -inv_h2;
  }
  return L;
}

}  // namespace

GridPropagator grid_trotter_kernel(double a, double b, bool periodic, const Potential& V,
                                   double t, int slices, std::size_t grid_size) {
  if (slices < 1) throw ConfigError("trotter slices must be >= 1");
  if (!(t > 0)) throw DomainError("trotter kernel needs t > 0");
  if (grid_size > 4096) throw ConfigError("dense diagonalization capped at 4096 grid points");
  GridPropagator out;
  build_grid(a, b, periodic, grid_size, out);
  out.t = t;
  const double tau = t / slices;
  if (out.spacing > std::sqrt(tau) / 8)
    throw ConfigError("grid too coarse: need >= 8 points across the slice width sqrt(t/slices)");

  const auto n = static_cast<Eigen::Index>(grid_size);
  // The second-difference matrix diagonalizes exactly in the sine basis
  // (Dirichlet) or the real Fourier basis (periodic): lambda_k follows
  // 2(1 - cos(angle_k)) / h^2. Free slice propagator exp(-tau L / 2).
  Eigen::MatrixXd basis(n, n);
  Eigen::VectorXd lambda(n);
  const double inv_h2 = 1.0 / (out.spacing * out.spacing);
  if (periodic) {
    Eigen::Index col = 0;
    const double norm1 = std::sqrt(1.0 / n), norm2 = std::sqrt(2.0 / n);
    for (Eigen::Index k = 0; col < n; ++k) {
      const double ang = 2 * kPi * k / n;
      const double lam = 2 * (1 - std::cos(ang)) * inv_h2;
      if (k == 0 || 2 * k == n) {
        for (Eigen::Index i = 0; i < n; ++i)
          basis(i, col) = (k == 0 ? 1.0 : (i % 2 ? -1.0 : 1.0)) * norm1;
        lambda(col++) = lam;
      } else {
        for (Eigen::Index i = 0; i < n; ++i) basis(i, col) = norm2 * std::cos(ang * i);
        lambda(col++) = lam;
        for (Eigen::Index i = 0; i < n; ++i) basis(i, col) = norm2 * std::sin(ang * i);
        lambda(col++) = lam;
      }
    }
  } else {
    const double norm = std::sqrt(2.0 / (n + 1));
    for (Eigen::Index k = 1; k <= n; ++k) {
      const double ang = kPi * k / (n + 1);
      lambda(k - 1) = 2 * (1 - std::cos(ang)) * inv_h2;
      for (Eigen::Index i = 0; i < n; ++i) basis(i, k - 1) = norm * std::sin(ang * (i + 1));
    }
  }
  Eigen::MatrixXd free_slice =
      basis * (-0.5 * tau * lambda.array()).exp().matrix().asDiagonal() * basis.transpose();
  Eigen::VectorXd pot(n);
  for (Eigen::Index i = 0; i < n; ++i)
    pot(i) = std::exp(-tau * V.base(Point(out.grid[static_cast<std::size_t>(i)])));
  Eigen::MatrixXd step = free_slice * pot.asDiagonal();

  // step^slices by binary exponentiation.
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd base = step;
  int e = slices;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }

  out.matrix.resize(grid_size * grid_size);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out.matrix[static_cast<std::size_t>(i) * grid_size + static_cast<std::size_t>(j)] =
          acc(i, j) / out.spacing;
  return out;
}

GridPropagator spectral_kernel(double a, double b, bool periodic, const Potential& V,
                               double t, std::size_t grid_size) {
  if (!(t > 0)) throw DomainError("spectral kernel needs t > 0");
  if (grid_size > 4096) throw ConfigError("dense diagonalization capped at 4096 grid points");
  GridPropagator out;
  build_grid(a, b, periodic, grid_size, out);
  out.t = t;

  const auto n = static_cast<Eigen::Index>(grid_size);
  Eigen::MatrixXd H = 0.5 * laplacian_matrix(grid_size, out.spacing, periodic);
  for (Eigen::Index i = 0; i < n; ++i)
    H(i, i) += V.base(Point(out.grid[static_cast<std::size_t>(i)]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
  if (eig.info() != Eigen::Success) throw NumericalError("hamiltonian eigensolver failed");
  Eigen::MatrixXd K =
      eig.eigenvectors() *
      (-t * eig.eigenvalues().array()).exp().matrix().asDiagonal() *
      eig.eigenvectors().transpose();

  out.matrix.resize(grid_size * grid_size);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out.matrix[static_cast<std::size_t>(i) * grid_size + static_cast<std::size_t>(j)] =
          K(i, j) / out.spacing;
  return out;
}

IntervalUnion IntervalUnion::of(std::vector<std::pair<double, double>> parts) {
  for (auto& [lo, hi] : parts)
    if (!(lo <= hi)) throw ConfigError("interval with lo > hi");
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& p : parts) {
    if (!merged.empty() && p.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, p.second);
    else
      merged.push_back(p);
  }
  return IntervalUnion{std::move(merged)};
}

IntervalUnion IntervalUnion::whole_line() {
  return IntervalUnion{{{-1e30, 1e30}}};
}

bool IntervalUnion::contains(double x) const {
  for (const auto& [lo, hi] : parts)
    if (x >= lo && x <= hi) return true;
  return false;
}

double IntervalUnion::length() const {
  double s = 0;
  for (const auto& [lo, hi] : parts) s += hi - lo;
  return s;
}

CylinderSpec CylinderSpec::make(double q1, double q2, double t, std::vector<double> times,
                                std::vector<IntervalUnion> boxes) {
  if (!(t > 0)) throw DomainError("cylinder horizon must be positive");
  if (times.size() != boxes.size()) throw ConfigError("one box per interior time required");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0) || !(times[i] < t))
      throw ConfigError("cylinder times must be interior to (0, t)");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw ConfigError("cylinder times must be strictly increasing");
  }
  return CylinderSpec{q1, q2, t, std::move(times), std::move(boxes)};
}

namespace {

struct LevelNodes {
  std::vector<double> xs, ws;
};

// Quadrature nodes for one interior level, boxes clipped to the region the
// bridge can visibly reach (Gaussian tails past 10 sigma are < 1e-21).
LevelNodes level_nodes(const CylinderSpec& spec, std::size_t level, int segments_per_sigma) {
  const double sigma = std::sqrt(spec.horizon);
  const double lo_clip = std::min(spec.q1, spec.q2) - 10 * sigma;
  const double hi_clip = std::max(spec.q1, spec.q2) + 10 * sigma;
  LevelNodes out;
  for (const auto& [blo, bhi] : spec.boxes[level].parts) {
    const double lo = std::max(blo, lo_clip);
    const double hi = std::min(bhi, hi_clip);
    if (!(hi > lo)) continue;
    // Local scale: the tighter of the adjacent time gaps.
    const double gap_before =
        spec.times[level] - (level == 0 ? 0.0 : spec.times[level - 1]);
    const double gap_after =
        (level + 1 == spec.times.size() ? spec.horizon : spec.times[level + 1]) -
        spec.times[level];
    const double scale = std::sqrt(std::min(gap_before, gap_after));
    const int segments = std::max(
        2, static_cast<int>(std::ceil((hi - lo) / scale)) * segments_per_sigma);
    gl_nodes(lo, hi, segments, out.xs, out.ws);
  }
  return out;
}

// Backward transfer evaluation: f_last(x) = K(x, q2), then fold each level.
double evaluate_cylinder(const CylinderSpec& spec, int segments_per_sigma) {
  const std::size_t levels = spec.times.size();
  std::vector<LevelNodes> nodes(levels);
  for (std::size_t k = 0; k < levels; ++k)
    nodes[k] = level_nodes(spec, k, segments_per_sigma);
  for (const auto& ln : nodes)
    if (ln.xs.empty()) return 0.0;

  std::vector<double> f = nodes[levels - 1].ws;
  {
    const double dt = spec.horizon - spec.times[levels - 1];
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] *= free_line_kernel(nodes[levels - 1].xs[i], spec.q2, dt);
  }
  for (std::size_t k = levels - 1; k-- > 0;) {
    const double dt = spec.times[k + 1] - spec.times[k];
    std::vector<double> g(nodes[k].xs.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      double s = 0;
      for (std::size_t j = 0; j < f.size(); ++j)
        s += free_line_kernel(nodes[k].xs[i], nodes[k + 1].xs[j], dt) * f[j];
      g[i] = nodes[k].ws[i] * s;
    }
    f = std::move(g);
  }
  double total = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    total += free_line_kernel(spec.q1, nodes[0].xs[i], spec.times[0]) * f[i];
  return total;
}

}  // namespace

double cylinder_measure(const CylinderSpec& spec, double tol) {
  if (spec.times.empty()) return free_line_kernel(spec.q1, spec.q2, spec.horizon);
  if (spec.times.size() > 4)
    throw ConfigError("cylinder quadrature supports at most 4 interior times");
  if (!(tol > 0)) throw ConfigError("cylinder tolerance must be positive");
  double prev = evaluate_cylinder(spec, 1);
  double diff = 0;
  for (int sps = 2; sps <= 32; sps *= 2) {
    const double next = evaluate_cylinder(spec, sps);
    diff = std::abs(next - prev);
    prev = next;
    if (diff <= tol) return next;
  }
  throw AccuracyError("cylinder quadrature did not reach the requested tolerance", diff);
}

}  // namespace fkwalk
