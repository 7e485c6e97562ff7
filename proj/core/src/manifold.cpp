#include "fkwalk/manifold.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace fkwalk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod can land exactly on 2pi after the add
  return w;
}

struct Vec3 {
  double x, y, z;
};
Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

Vec3 sphere_embed(const Point& p) {
  const double st = std::sin(p[0]), ct = std::cos(p[0]);
  return {st * std::cos(p[1]), st * std::sin(p[1]), ct};
}

Point sphere_unembed(Vec3 u) {
  const double colat = std::acos(std::clamp(u.z, -1.0, 1.0));
  double lon = std::atan2(u.y, u.x);
  if (lon < 0) lon += kTwoPi;
  if (std::sin(colat) < 1e-14) lon = 0.0;
  return Point(colat, lon);
}

bool sphere_at_pole(const Point& p) { return std::sin(p[0]) < 1e-12; }

// Unit (euclidean) tangent 3-vector for unit-g direction components at p.
Vec3 sphere_dir_embed(const Point& p, const TangentDirection& d, double r) {
  if (sphere_at_pole(p)) {
    const double psi = std::atan2(d.components[1], d.components[0]);
    // At the south pole e_theta points back toward decreasing z either way;
    // the azimuth convention below keeps step(north, any, pi) == south exact.
    Vec3 u{std::cos(psi), std::sin(psi), 0.0};
    if (p[0] > kPi / 2) u = {-u.x, u.y, 0.0};
    return u;
  }
  const double st = std::sin(p[0]), ct = std::cos(p[0]);
  const double cp = std::cos(p[1]), sp = std::sin(p[1]);
  const Vec3 e_th{ct * cp, ct * sp, -st};
  const Vec3 e_ph{-sp, cp, 0.0};
  // g-unit components obey r^2 (dth^2 + st^2 dph^2) = 1.
  Vec3 u = d.components[0] * e_th + (st * d.components[1]) * e_ph;
  return r * u;
}

TangentDirection sphere_dir_unembed(const Point& p, Vec3 u, double r) {
  if (sphere_at_pole(p)) {
    double ux = u.x, uy = u.y;
    if (p[0] > kPi / 2) ux = -ux;
    return TangentDirection{{ux / r, uy / r}};
  }
  const double st = std::sin(p[0]), ct = std::cos(p[0]);
  const double cp = std::cos(p[1]), sp = std::sin(p[1]);
  const Vec3 e_th{ct * cp, ct * sp, -st};
  const Vec3 e_ph{-sp, cp, 0.0};
  return TangentDirection{{dot(u, e_th) / r, dot(u, e_ph) / (r * st)}};
}

// ---------------------------------------------------------------------------
// Chart catalogue
// ---------------------------------------------------------------------------

Eigen::MatrixXd chart_metric(const ChartSpec& spec, const double* x, int dim) {
  if (spec.metric_name == "euclidean") {
    return Eigen::MatrixXd::Identity(dim, dim);
  }
  if (spec.metric_name == "round_sphere") {
    const double r = spec.params.at(0);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
    const double st = std::sin(x[0]);
    g(0, 0) = r * r;
    g(1, 1) = r * r * st * st;
    return g;
  }
  if (spec.metric_name == "half_plane") {
    const double a = spec.params.at(0);
    const double f = a * a / (x[1] * x[1]);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
    g(0, 0) = f;
    g(1, 1) = f;
    return g;
  }
  throw ConfigError("unknown chart metric catalogue entry: " + spec.metric_name);
}

double chart_scale(const ChartSpec& spec) {
  double s = 0.0;
  for (std::size_t i = 0; i < spec.box_lo.size(); ++i) {
    s = std::max(s, spec.box_hi[i] - spec.box_lo[i]);
  }
  return s > 0 ? s : 1.0;
}

bool chart_contains(const ChartSpec& spec, const double* x, int dim) {
  for (int i = 0; i < dim; ++i) {
    if (x[i] < spec.box_lo[i] || x[i] > spec.box_hi[i]) return false;
  }
  return true;
}

// Christoffel symbols Gamma^k_{ij} from central differences of the metric.
// out[k](i, j).
std::vector<Eigen::MatrixXd> chart_christoffel(const ChartSpec& spec,
                                               const Eigen::VectorXd& x,
                                               double h) {
  const int d = static_cast<int>(x.size());
  std::vector<Eigen::MatrixXd> dg(d);  // dg[m] = d g / d x^m
  Eigen::VectorXd xp = x, xm = x;
  for (int m = 0; m < d; ++m) {
    xp(m) = x(m) + h;
    xm(m) = x(m) - h;
    dg[m] = (chart_metric(spec, xp.data(), d) - chart_metric(spec, xm.data(), d)) / (2 * h);
    xp(m) = x(m);
    xm(m) = x(m);
  }
  const Eigen::MatrixXd ginv = chart_metric(spec, x.data(), d).inverse();
  std::vector<Eigen::MatrixXd> gamma(d, Eigen::MatrixXd::Zero(d, d));
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l) {
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        }
        gamma[k](i, j) = 0.5 * s;
      }
    }
  }
  return gamma;
}

struct ChartFlowState {
  Eigen::VectorXd x;
  Eigen::VectorXd v;
};

void chart_geodesic_rhs(const ChartSpec& spec, double h, const ChartFlowState& s,
                        Eigen::VectorXd& dx, Eigen::VectorXd& dv) {
  const auto gamma = chart_christoffel(spec, s.x, h);
  const int d = static_cast<int>(s.x.size());
  dx = s.v;
  dv.resize(d);
  for (int k = 0; k < d; ++k) {
    dv(k) = -s.v.dot(gamma[k] * s.v);
  }
}

// Integrates the geodesic ODE for unit time with initial velocity v0.
// Records intermediate states when trace != nullptr.
ChartFlowState chart_flow(const ChartSpec& spec, int dim, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& v0, int substeps, long step_index,
                          std::vector<ChartFlowState>* trace = nullptr) {
  const double h = 1e-4 * chart_scale(spec);
  ChartFlowState s{x0, v0};
  const double dt = 1.0 / substeps;
  Eigen::VectorXd k1x, k1v, k2x, k2v, k3x, k3v, k4x, k4v;
  if (trace) {
    trace->clear();
    trace->push_back(s);
  }
  for (int i = 0; i < substeps; ++i) {
    ChartFlowState tmp = s;
    chart_geodesic_rhs(spec, h, s, k1x, k1v);
    tmp.x = s.x + 0.5 * dt * k1x;
    tmp.v = s.v + 0.5 * dt * k1v;
    chart_geodesic_rhs(spec, h, tmp, k2x, k2v);
    tmp.x = s.x + 0.5 * dt * k2x;
    tmp.v = s.v + 0.5 * dt * k2v;
    chart_geodesic_rhs(spec, h, tmp, k3x, k3v);
    tmp.x = s.x + dt * k3x;
    tmp.v = s.v + dt * k3v;
    chart_geodesic_rhs(spec, h, tmp, k4x, k4v);
    s.x += (dt / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x);
    s.v += (dt / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v);
    if (!chart_contains(spec, s.x.data(), dim)) {
      std::vector<double> boundary(s.x.size());
      for (int j = 0; j < dim; ++j) {
        boundary[j] = std::clamp(s.x(j), spec.box_lo[j], spec.box_hi[j]);
      }
      throw ChartExitError("geodesic step left the chart domain box", boundary, step_index);
    }
    if (trace) trace->push_back(s);
  }
  return s;
}

int chart_substeps(double length, double scale) {
  const int by_scale = static_cast<int>(std::ceil(length / (0.01 * scale)));
  return std::max(10, by_scale);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 40);
}

// Newton shooting on the initial velocity of exp_p; returns v with exp_p(v) = q.
Eigen::VectorXd chart_shoot(const ChartSpec& spec, int dim, const Point& p, const Point& q) {
  Eigen::Map<const Eigen::VectorXd> x0(p.coords.data(), dim);
  Eigen::Map<const Eigen::VectorXd> x1(q.coords.data(), dim);
  Eigen::VectorXd v = x1 - x0;
  const double scale = chart_scale(spec);
  const Eigen::MatrixXd g0 = chart_metric(spec, p.coords.data(), dim);
  const int substeps = chart_substeps(std::sqrt(std::max(1e-300, v.dot(g0 * v))), scale);
  const double tol = 1e-8 * scale;
  for (int iter = 0; iter < 60; ++iter) {
    const Eigen::VectorXd r = chart_flow(spec, dim, x0, v, substeps, -1).x - x1;
    if (r.lpNorm<Eigen::Infinity>() <= tol) return v;
    Eigen::MatrixXd jac(dim, dim);
    const double dstep = 1e-6 * (1.0 + v.norm());
    for (int j = 0; j < dim; ++j) {
      Eigen::VectorXd vp = v, vm = v;
      vp(j) += dstep;
      vm(j) -= dstep;
      jac.col(j) = (chart_flow(spec, dim, x0, vp, substeps, -1).x -
                    chart_flow(spec, dim, x0, vm, substeps, -1).x) /
                   (2 * dstep);
    }
    const Eigen::VectorXd dv = jac.fullPivLu().solve(r);
    v -= dv;
  }
  std::ostringstream msg;
  msg << "chart geodesic shooting did not converge to " << tol << " between given points";
  throw NumericalError(msg.str());
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Manifold Manifold::euclidean_line() { return Manifold(ManifoldKind::EuclideanLine, 1, 0.0); }

Manifold Manifold::euclidean_space(int dimension) {
  if (dimension < 1) throw ConfigError("dimension must be >= 1");
  return Manifold(ManifoldKind::EuclideanSpace, dimension, 0.0);
}

Manifold Manifold::circle(double radius) {
  if (!(radius > 0)) throw ConfigError("circle radius must be > 0");
  return Manifold(ManifoldKind::Circle, 1, radius);
}

Manifold Manifold::sphere2(double radius) {
  if (!(radius > 0)) throw ConfigError("sphere radius must be > 0");
  return Manifold(ManifoldKind::Sphere2, 2, radius);
}

Manifold Manifold::hyperbolic_plane(double pseudo_radius) {
  if (!(pseudo_radius > 0)) throw ConfigError("pseudo_radius must be > 0");
  return Manifold(ManifoldKind::HyperbolicPlane, 2, pseudo_radius);
}

Manifold Manifold::chart(ChartSpec spec) {
  const int d = static_cast<int>(spec.box_lo.size());
  if (d < 1 || spec.box_hi.size() != spec.box_lo.size()) {
    throw ConfigError("chart domain box is malformed");
  }
  for (int i = 0; i < d; ++i) {
    if (!(spec.box_lo[i] < spec.box_hi[i])) throw ConfigError("chart box must be nonempty");
  }
  // SPD spot check on a coarse lattice of the box.
  const int per_axis = d <= 2 ? 5 : 3;
  std::vector<double> x(d);
  long total = 1;
  for (int i = 0; i < d; ++i) total *= per_axis;
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int i = 0; i < d; ++i) {
      const int j = rem % per_axis;
      rem /= per_axis;
      const double f = (j + 0.5) / per_axis;
      x[i] = spec.box_lo[i] + f * (spec.box_hi[i] - spec.box_lo[i]);
    }
    Eigen::MatrixXd g = chart_metric(spec, x.data(), d);
    if (!g.isApprox(g.transpose(), 1e-12)) throw ConfigError("chart metric is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() != Eigen::Success) {
      throw ConfigError("chart metric is not positive definite inside the domain box");
    }
  }
  Manifold m(ManifoldKind::Chart, d, 0.0);
  m.chart_ = std::move(spec);
  return m;
}

const ChartSpec& Manifold::chart_spec() const {
  if (kind_ != ManifoldKind::Chart) throw ConfigError("not a chart manifold");
  return chart_;
}

// ---------------------------------------------------------------------------
// Domain handling
// ---------------------------------------------------------------------------

bool Manifold::in_domain(const Point& p) const {
  if (static_cast<int>(p.dim()) != dim_) return false;
  for (double c : p.coords) {
    if (!std::isfinite(c)) return false;
  }
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
    case ManifoldKind::EuclideanSpace:
    case ManifoldKind::Circle:
      return true;
    case ManifoldKind::Sphere2:
      return p[0] >= 0.0 && p[0] <= kPi;
    case ManifoldKind::HyperbolicPlane:
      return p[1] > 0.0;
    case ManifoldKind::Chart:
      return chart_contains(chart_, p.coords.data(), dim_);
  }
  return false;
}

Point Manifold::canonicalize(const Point& p) const {
  if (!in_domain(p) && kind_ != ManifoldKind::Circle) {
    throw DomainError("point outside manifold domain");
  }
  if (kind_ == ManifoldKind::Circle) {
    return Point(wrap_angle(p[0]));
  }
  if (kind_ == ManifoldKind::Sphere2) {
    Point q = p;
    q.coords[1] = sphere_at_pole(p) ? 0.0 : wrap_angle(p[1]);
    return q;
  }
  return p;
}

bool Manifold::points_equal(const Point& p, const Point& q, double tol) const {
  switch (kind_) {
    case ManifoldKind::Circle: {
      const double d = std::abs(wrap_angle(p[0]) - wrap_angle(q[0]));
      return std::min(d, kTwoPi - d) <= tol;
    }
    case ManifoldKind::Sphere2: {
      if (std::abs(p[0] - q[0]) > tol) return false;
      if (sphere_at_pole(p) || sphere_at_pole(q)) return true;
      const double d = std::abs(wrap_angle(p[1]) - wrap_angle(q[1]));
      return std::min(d, kTwoPi - d) <= tol;
    }
    default: {
      for (int i = 0; i < dim_; ++i) {
        if (std::abs(p[i] - q[i]) > tol) return false;
      }
      return true;
    }
  }
}

// ---------------------------------------------------------------------------
// Metric
// ---------------------------------------------------------------------------

std::vector<double> Manifold::metric(const Point& p) const {
  if (!in_domain(p)) throw DomainError("metric: point outside domain");
  std::vector<double> g(static_cast<std::size_t>(dim_) * dim_, 0.0);
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
    case ManifoldKind::EuclideanSpace:
      for (int i = 0; i < dim_; ++i) g[i * dim_ + i] = 1.0;
      break;
    case ManifoldKind::Circle:
      g[0] = radius_ * radius_;
      break;
    case ManifoldKind::Sphere2: {
      const double st = std::sin(p[0]);
      g[0] = radius_ * radius_;
      g[3] = radius_ * radius_ * st * st;
      break;
    }
    case ManifoldKind::HyperbolicPlane: {
      const double f = radius_ * radius_ / (p[1] * p[1]);
      g[0] = f;
      g[3] = f;
      break;
    }
    case ManifoldKind::Chart: {
      Eigen::MatrixXd m = chart_metric(chart_, p.coords.data(), dim_);
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) g[i * dim_ + j] = m(i, j);
      }
      break;
    }
  }
  return g;
}

double Manifold::metric_density(const Point& p) const {
  if (!in_domain(p)) throw DomainError("metric_density: point outside domain");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
    case ManifoldKind::EuclideanSpace:
      return 1.0;
    case ManifoldKind::Circle:
      return radius_;
    case ManifoldKind::Sphere2:
      return radius_ * radius_ * std::abs(std::sin(p[0]));
    case ManifoldKind::HyperbolicPlane:
      return radius_ * radius_ / (p[1] * p[1]);
    case ManifoldKind::Chart: {
      const Eigen::MatrixXd g = chart_metric(chart_, p.coords.data(), dim_);
      const double det = g.determinant();
      if (!(det > 0)) throw NumericalError("chart metric determinant not positive");
      return std::sqrt(det);
    }
  }
  return 1.0;
}

// ---------------------------------------------------------------------------
// Distance
// ---------------------------------------------------------------------------

double Manifold::geodesic_distance(const Point& p, const Point& q) const {
  if (!in_domain(p) || !in_domain(q)) throw DomainError("geodesic_distance: point outside domain");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
      return std::abs(p[0] - q[0]);
    case ManifoldKind::EuclideanSpace: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
      return std::sqrt(s);
    }
    case ManifoldKind::Circle: {
      const double d = std::abs(wrap_angle(p[0]) - wrap_angle(q[0]));
      return radius_ * std::min(d, kTwoPi - d);
    }
    case ManifoldKind::Sphere2: {
      const Vec3 a = sphere_embed(p), b = sphere_embed(q);
      return radius_ * std::atan2(norm(cross(a, b)), dot(a, b));
    }
    case ManifoldKind::HyperbolicPlane: {
      const double dx = p[0] - q[0], dy = p[1] - q[1];
      const double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p[1] * q[1]);
      return radius_ * std::acosh(std::max(1.0, arg));
    }
    case ManifoldKind::Chart:
      break;
  }

  // Chart manifolds.
  if (dim_ == 1) {
    const double a = p[0], b = q[0];
    auto f = [&](double x) {
      return std::sqrt(chart_metric(chart_, &x, 1)(0, 0));
    };
    return std::abs(integrate(f, a, b, 1e-12 * (1 + std::abs(b - a))));
  }

  const Eigen::VectorXd v = chart_shoot(chart_, dim_, p, q);
  const Eigen::MatrixXd g0 = chart_metric(chart_, p.coords.data(), dim_);
  return std::sqrt(std::max(0.0, v.dot(g0 * v)));
}

TangentDirection Manifold::direction_to(const Point& p, const Point& q) const {
  if (!in_domain(p) || !in_domain(q)) throw DomainError("direction_to: point outside domain");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
      return TangentDirection{{q[0] >= p[0] ? 1.0 : -1.0}};
    case ManifoldKind::EuclideanSpace: {
      std::vector<double> v(dim_);
      for (int i = 0; i < dim_; ++i) v[i] = q[i] - p[i];
      return normalize_direction(p, std::move(v));
    }
    case ManifoldKind::Circle: {
      double d = wrap_angle(q[0]) - wrap_angle(p[0]);
      if (d > kPi) d -= kTwoPi;
      if (d < -kPi) d += kTwoPi;
      return TangentDirection{{(d >= 0 ? 1.0 : -1.0) / radius_}};
    }
    case ManifoldKind::Sphere2: {
      const Vec3 a = sphere_embed(p), b = sphere_embed(q);
      const double c = dot(a, b);
      Vec3 u = b + (-c) * a;  // component of b orthogonal to a
      const double un = norm(u);
      if (un < 1e-14) {
        // Coincident or antipodal: any direction is shortest for antipodal.
        return sphere_dir_unembed(p, sphere_dir_embed(p, TangentDirection{{1.0 / radius_, 0.0}}, radius_), radius_);
      }
      u = (1.0 / un) * u;
      return sphere_dir_unembed(p, u, radius_);
    }
    case ManifoldKind::HyperbolicPlane: {
      if (std::abs(p[0] - q[0]) < 1e-14 * (1 + std::abs(p[0]))) {
        return normalize_direction(p, {0.0, q[1] >= p[1] ? 1.0 : -1.0});
      }
      const double c = ((q[0] * q[0] + q[1] * q[1]) - (p[0] * p[0] + p[1] * p[1])) /
                       (2.0 * (q[0] - p[0]));
      const double bp = std::atan2(p[1], p[0] - c);
      const double bq = std::atan2(q[1], q[0] - c);
      const double sgn = bq >= bp ? 1.0 : -1.0;
      return normalize_direction(p, {-std::sin(bp) * sgn, std::cos(bp) * sgn});
    }
    case ManifoldKind::Chart: {
      const Eigen::VectorXd v = chart_shoot(chart_, dim_, p, q);
      return normalize_direction(p, std::vector<double>(v.data(), v.data() + dim_));
    }
  }
  throw ConfigError("unreachable");
}

// ---------------------------------------------------------------------------
// Geodesic step
// ---------------------------------------------------------------------------

GeodesicEnd Manifold::geodesic_flow(const Point& p, const TangentDirection& dir,
                                    double length) const {
  if (!in_domain(p)) throw DomainError("geodesic_step: point outside domain");
  if (length < 0) throw DomainError("geodesic_step: negative length");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
    case ManifoldKind::EuclideanSpace: {
      Point q = p;
      for (int i = 0; i < dim_; ++i) q.coords[i] += length * dir.components[i];
      return {std::move(q), dir};
    }
    case ManifoldKind::Circle: {
      const double sgn = dir.components[0] >= 0 ? 1.0 : -1.0;
      return {Point(wrap_angle(p[0] + sgn * length / radius_)), dir};
    }
    case ManifoldKind::Sphere2: {
      const Vec3 ph = sphere_embed(p);
      const Vec3 u = sphere_dir_embed(p, dir, radius_);
      const double a = length / radius_;
      const Vec3 ph2 = std::cos(a) * ph + std::sin(a) * u;
      const Vec3 u2 = -std::sin(a) * ph + std::cos(a) * u;
      Point q = sphere_unembed(ph2);
      return {q, sphere_dir_unembed(q, u2, radius_)};
    }
    case ManifoldKind::HyperbolicPlane: {
      // Work in the standard half plane; lengths scale by the pseudo-radius.
      const double s = length / radius_;
      const double x0 = p[0], y0 = p[1];
      const double vx = dir.components[0], vy = dir.components[1];
      const double vn = std::hypot(vx, vy);
      const double ux = vx / vn, uy = vy / vn;
      if (std::abs(ux) < 1e-14) {
        const double y1 = y0 * std::exp(uy > 0 ? s : -s);
        return {Point(x0, y1),
                normalize_direction(Point(x0, y1), {0.0, uy > 0 ? 1.0 : -1.0})};
      }
      const double c = x0 + y0 * uy / ux;             // geodesic circle center on the x-axis
      const double rho = std::hypot(x0 - c, y0);
      const double beta0 = std::atan2(y0, x0 - c);    // in (0, pi)
      const double drift = -std::sin(beta0) * ux + std::cos(beta0) * uy;
      const double sgn = drift >= 0 ? 1.0 : -1.0;     // sign of d(beta)/ds
      const double t1 = std::tan(0.5 * beta0) * std::exp(sgn * s);
      const double beta1 = 2.0 * std::atan(t1);
      const double x1 = c + rho * std::cos(beta1);
      const double y1 = rho * std::sin(beta1);
      const double tx = -std::sin(beta1) * sgn, ty = std::cos(beta1) * sgn;
      return {Point(x1, y1), normalize_direction(Point(x1, y1), {tx, ty})};
    }
    case ManifoldKind::Chart:
      break;
  }

  Eigen::Map<const Eigen::VectorXd> x0(p.coords.data(), dim_);
  Eigen::Map<const Eigen::VectorXd> v0(dir.components.data(), dim_);
  if (length == 0) return {p, dir};
  const int substeps = chart_substeps(length, chart_scale(chart_));
  const ChartFlowState end = chart_flow(chart_, dim_, x0, length * v0, substeps, -1);
  Point q(std::vector<double>(end.x.data(), end.x.data() + dim_));
  return {q, normalize_direction(q, std::vector<double>(end.v.data(), end.v.data() + dim_))};
}

Point Manifold::geodesic_step(const Point& p, const TangentDirection& dir, double length) const {
  return geodesic_flow(p, dir, length).point;
}

// ---------------------------------------------------------------------------
// Curvature
// ---------------------------------------------------------------------------

double Manifold::scalar_curvature(const Point& p) const {
  if (!in_domain(p)) throw DomainError("scalar_curvature: point outside domain");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
    case ManifoldKind::EuclideanSpace:
    case ManifoldKind::Circle:
      return 0.0;
    case ManifoldKind::Sphere2:
      return 2.0 / (radius_ * radius_);
    case ManifoldKind::HyperbolicPlane:
      return -2.0 / (radius_ * radius_);
    case ManifoldKind::Chart:
      break;
  }

  const int d = dim_;
  if (d == 1) return 0.0;  // every 1-d metric is flat
  const double h = 1e-4 * chart_scale(chart_);
  Eigen::Map<const Eigen::VectorXd> x(p.coords.data(), d);
  for (int i = 0; i < d; ++i) {
    if (x(i) - 2 * h < chart_.box_lo[i] || x(i) + 2 * h > chart_.box_hi[i]) {
      throw NumericalError("scalar_curvature: finite differences step outside the chart box");
    }
  }
  const auto gamma_at = [&](const Eigen::VectorXd& y) { return chart_christoffel(chart_, y, h); };
  const auto gamma = gamma_at(x);
  // dgamma[m][k](i, j) = d Gamma^k_{ij} / d x^m
  std::vector<std::vector<Eigen::MatrixXd>> dgamma(d);
  for (int m = 0; m < d; ++m) {
    Eigen::VectorXd xp = x, xm = x;
    xp(m) += h;
    xm(m) -= h;
    const auto gp = gamma_at(xp), gm = gamma_at(xm);
    dgamma[m].resize(d);
    for (int k = 0; k < d; ++k) dgamma[m][k] = (gp[k] - gm[k]) / (2 * h);
  }
  const Eigen::MatrixXd ginv = chart_metric(chart_, p.coords.data(), d).inverse();
  double scalar = 0.0;
  for (int s = 0; s < d; ++s) {
    for (int n = 0; n < d; ++n) {
      double ric = 0.0;  // Ric_{sn} = R^m_{s m n}
      for (int m = 0; m < d; ++m) {
        ric += dgamma[m][m](n, s) - dgamma[n][m](m, s);
        for (int l = 0; l < d; ++l) {
          ric += gamma[m](m, l) * gamma[l](n, s) - gamma[m](n, l) * gamma[l](m, s);
        }
      }
      scalar += ginv(s, n) * ric;
    }
  }
  return scalar;
}

// ---------------------------------------------------------------------------
// Ball volume
// ---------------------------------------------------------------------------

BallVolume Manifold::ball_volume(const Point& center, double radius) const {
  if (!(radius > 0)) throw DomainError("ball_volume: radius must be > 0");
  if (!in_domain(center)) throw DomainError("ball_volume: center outside domain");
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
      return {2.0 * radius, 0.0, false};
    case ManifoldKind::EuclideanSpace: {
      // pi^{D/2} / Gamma(D/2 + 1) * radius^D
      const double vol = std::pow(kPi, dim_ / 2.0) / std::tgamma(dim_ / 2.0 + 1.0) *
                         std::pow(radius, dim_);
      return {vol, 0.0, false};
    }
    case ManifoldKind::Circle: {
      const bool clamped = radius > kPi * radius_;
      return {clamped ? kTwoPi * radius_ : 2.0 * radius, 0.0, clamped};
    }
    case ManifoldKind::Sphere2: {
      const bool clamped = radius > kPi * radius_;
      const double rc = clamped ? kPi * radius_ : radius;
      return {kTwoPi * radius_ * radius_ * (1.0 - std::cos(rc / radius_)), 0.0, clamped};
    }
    case ManifoldKind::HyperbolicPlane: {
      const double a = radius_;
      return {kTwoPi * a * a * (std::cosh(radius / a) - 1.0), 0.0, false};
    }
    case ManifoldKind::Chart:
      break;
  }

  if (dim_ == 1) {
    // Bisection for the coordinate offsets at geodesic distance `radius`.
    auto offset_at = [&](double sign) {
      double lo = 0.0;
      double hi = sign > 0 ? chart_.box_hi[0] - center[0] : center[0] - chart_.box_lo[0];
      const Point edge(center[0] + sign * hi);
      if (geodesic_distance(center, edge) < radius) {
        throw ChartExitError("ball exceeds the chart box", {edge[0]}, -1);
      }
      for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (geodesic_distance(center, Point(center[0] + sign * mid)) < radius) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    };
    const double up = offset_at(1.0), down = offset_at(-1.0);
    auto f = [&](double x) { return std::sqrt(chart_metric(chart_, &x, 1)(0, 0)); };
    return {integrate(f, center[0] - down, center[0] + up, 1e-12), 0.0, false};
  }
  if (dim_ != 2) {
    throw ConfigError("ball_volume on charts of dimension >= 3 is not supported");
  }

  // Geodesic polar quadrature: trapezoid over launch angles (periodic, so
  // spectrally accurate), Simpson along each ray, with the angular Jacobian
  // column from paired rays at alpha +/- delta.
  const int n_alpha = 64;
  const int n_s = 200;  // even
  const double delta = 1e-5;
  const double scale = chart_scale(chart_);
  Eigen::Map<const Eigen::VectorXd> x0(center.coords.data(), 2);
  double total = 0.0;
  std::vector<ChartFlowState> mid, plus, minus;
  for (int j = 0; j < n_alpha; ++j) {
    const double alpha = kTwoPi * j / n_alpha;
    auto launch = [&](double a) {
      const TangentDirection d =
          normalize_direction(center, {std::cos(a), std::sin(a)});
      Eigen::VectorXd v(2);
      v << radius * d.components[0], radius * d.components[1];
      return v;
    };
    int substeps = std::max(n_s, chart_substeps(radius, scale));
    if (substeps % 2 != 0) ++substeps;
    chart_flow(chart_, 2, x0, launch(alpha), substeps, -1, &mid);
    chart_flow(chart_, 2, x0, launch(alpha + delta), substeps, -1, &plus);
    chart_flow(chart_, 2, x0, launch(alpha - delta), substeps, -1, &minus);
    const double ds = radius / substeps;
    double ray = 0.0;
    for (int i = 0; i <= substeps; ++i) {
      const Eigen::VectorXd& xi = mid[i].x;
      const Eigen::VectorXd dx_ds = mid[i].v / radius;  // velocity has speed `radius`
      const Eigen::VectorXd dx_da = (plus[i].x - minus[i].x) / (2 * delta);
      const double det = dx_ds(0) * dx_da(1) - dx_ds(1) * dx_da(0);
      const double dens = std::sqrt(chart_metric(chart_, xi.data(), 2).determinant());
      const double integrand = dens * std::abs(det);
      const double w = (i == 0 || i == substeps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      ray += w * integrand;
    }
    total += ray * ds / 3.0;
  }
  return {total * kTwoPi / n_alpha, 0.0, false};
}

// ---------------------------------------------------------------------------
// Tangent directions
// ---------------------------------------------------------------------------

TangentDirection Manifold::normalize_direction(const Point& p,
                                               std::vector<double> components) const {
  if (static_cast<int>(components.size()) != dim_) {
    throw ConfigError("direction has wrong dimension");
  }
  double norm2 = 0.0;
  if (kind_ == ManifoldKind::Sphere2 && sphere_at_pole(p)) {
    norm2 = radius_ * radius_ *
            (components[0] * components[0] + components[1] * components[1]);
  } else {
    const auto g = metric(p);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        norm2 += components[i] * g[i * dim_ + j] * components[j];
      }
    }
  }
  if (!(norm2 > 0)) throw DomainError("cannot normalize a zero tangent vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : components) c *= inv;
  return TangentDirection{std::move(components)};
}

TangentDirection Manifold::sample_unit_direction(const Point& p, CounterRng& rng) const {
  switch (kind_) {
    case ManifoldKind::EuclideanLine:
      return TangentDirection{{static_cast<double>(rng.next_sign())}};
    case ManifoldKind::Circle:
      return TangentDirection{{rng.next_sign() / radius_}};
    case ManifoldKind::Sphere2: {
      const double alpha = kTwoPi * rng.next_double();
      if (sphere_at_pole(p)) {
        return TangentDirection{{std::cos(alpha) / radius_, std::sin(alpha) / radius_}};
      }
      const double st = std::sin(p[0]);
      return TangentDirection{
          {std::cos(alpha) / radius_, std::sin(alpha) / (radius_ * st)}};
    }
    case ManifoldKind::HyperbolicPlane: {
      const double alpha = kTwoPi * rng.next_double();
      const double s = p[1] / radius_;  // conformal metric: euclidean angles are isotropic
      return TangentDirection{{s * std::cos(alpha), s * std::sin(alpha)}};
    }
    case ManifoldKind::EuclideanSpace: {
      std::vector<double> v(dim_);
      double n2 = 0.0;
      do {
        n2 = 0.0;
        for (int i = 0; i < dim_; ++i) {
          v[i] = rng.next_normal();
          n2 += v[i] * v[i];
        }
      } while (n2 < 1e-30);
      const double inv = 1.0 / std::sqrt(n2);
      for (double& c : v) c *= inv;
      return TangentDirection{std::move(v)};
    }
    case ManifoldKind::Chart: {
      // z ~ N(0, I), v = L^{-T} z with g = L L^T gives an isotropic g-direction.
      const Eigen::MatrixXd g = chart_metric(chart_, p.coords.data(), dim_);
      Eigen::LLT<Eigen::MatrixXd> llt(g);
      if (llt.info() != Eigen::Success) throw NumericalError("metric not SPD at point");
      Eigen::VectorXd z(dim_);
      double n2 = 0.0;
      do {
        for (int i = 0; i < dim_; ++i) z(i) = rng.next_normal();
        n2 = z.squaredNorm();
      } while (n2 < 1e-30);
      Eigen::VectorXd v = llt.matrixU().solve(z);
      return normalize_direction(p, std::vector<double>(v.data(), v.data() + dim_));
    }
  }
  throw ConfigError("unreachable");
}

std::optional<double> Manifold::total_volume() const {
  switch (kind_) {
    case ManifoldKind::Circle:
      return kTwoPi * radius_;
    case ManifoldKind::Sphere2:
      return 4.0 * kPi * radius_ * radius_;
    default:
      return std::nullopt;
  }
}

}  // namespace fkwalk
