#include "fkwalk/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fkwalk {

namespace {

double sq_distance(const Point& p, const Point& center) {
  if (center.coords.empty()) {
    double s = 0;
    for (double x : p.coords) s += x * x;
    return s;
  }
  if (center.dim() != p.dim()) throw DomainError("potential center dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const double d = p[i] - center[i];
    s += d * d;
  }
  return s;
}

}  // namespace

Potential Potential::zero() { return Potential(PotentialKind::Zero, {}, Point(), 0.0); }

Potential Potential::constant(double value) {
  if (!std::isfinite(value)) throw ConfigError("constant potential must be finite");
  return Potential(PotentialKind::Constant, {value}, Point(), value);
}

Potential Potential::harmonic(double omega_sq, Point center) {
  if (!(omega_sq >= 0) || !std::isfinite(omega_sq))
    throw ConfigError("harmonic potential needs omega_sq >= 0");
  return Potential(PotentialKind::Harmonic, {omega_sq}, std::move(center), 0.0);
}

Potential Potential::gaussian_well(double depth, double width, Point center) {
  if (!(depth >= 0) || !(width > 0)) throw ConfigError("gaussian well needs depth >= 0, width > 0");
  return Potential(PotentialKind::GaussianWell, {depth, width}, std::move(center), -depth);
}

Potential Potential::table(std::vector<double> x, std::vector<double> v) {
  if (x.size() != v.size() || x.size() < 2) throw ConfigError("table needs >= 2 matching entries");
  if (!std::is_sorted(x.begin(), x.end(), [](double a, double b) { return a <= b; }))
    throw ConfigError("table abscissas must be strictly increasing");
  for (double y : v)
    if (!std::isfinite(y)) throw ConfigError("table values must be finite");
  Potential p(PotentialKind::Table, {}, Point(),
              *std::min_element(v.begin(), v.end()));
  p.table_x_ = std::move(x);
  p.table_v_ = std::move(v);
  return p;
}

Potential Potential::with_coupling(double c) const {
  if (!std::isfinite(c)) throw ConfigError("curvature coupling must be finite");
  Potential p = *this;
  p.coupling_ = c;
  return p;
}

double Potential::base(const Point& p) const {
  double v = 0;
  switch (kind_) {
    case PotentialKind::Zero:
      return 0.0;
    case PotentialKind::Constant:
      return params_[0];
    case PotentialKind::Harmonic:
      v = 0.5 * params_[0] * sq_distance(p, center_);
      break;
    case PotentialKind::GaussianWell:
      v = -params_[0] * std::exp(-sq_distance(p, center_) / (2 * params_[1] * params_[1]));
      break;
    case PotentialKind::Table: {
      if (p.dim() != 1) throw DomainError("table potential is one dimensional");
      const double x = p[0];
      if (x <= table_x_.front()) return table_v_.front();
      if (x >= table_x_.back()) return table_v_.back();
      const auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
      const std::size_t i = static_cast<std::size_t>(it - table_x_.begin());
      const double f = (x - table_x_[i - 1]) / (table_x_[i] - table_x_[i - 1]);
      return table_v_[i - 1] + f * (table_v_[i] - table_v_[i - 1]);
    }
  }
  if (!std::isfinite(v)) throw NumericalError("potential evaluated to a non-finite value");
  return v;
}

double Potential::effective(const Point& p, const Manifold& m) const {
  double v = base(p);
  if (coupling_ != 0.0) v += coupling_ * m.scalar_curvature(p);
  return v;
}

std::string Potential::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case PotentialKind::Zero: out << "zero"; break;
    case PotentialKind::Constant: out << "constant(" << params_[0] << ")"; break;
    case PotentialKind::Harmonic: {
      out << "harmonic(" << params_[0];
      for (double c : center_.coords) out << "," << c;
      out << ")";
      break;
    }
    case PotentialKind::GaussianWell: {
      out << "well(" << params_[0] << "," << params_[1];
      for (double c : center_.coords) out << "," << c;
      out << ")";
      break;
    }
    case PotentialKind::Table: out << "table[" << table_x_.size() << "]"; break;
  }
  if (coupling_ != 0.0) out << "+" << coupling_ << "R";
  return out.str();
}

}  // namespace fkwalk
