#pragma once

#include <string>
#include <vector>

#include "fkwalk/errors.hpp"
#include "fkwalk/manifold.hpp"

namespace fkwalk {

enum class PotentialKind { Zero, Constant, Harmonic, GaussianWell, Table };

/// Catalogued potential plus an optional scalar-curvature coupling:
/// V_eff(p) = V(p) + c * R(p). All base potentials are bounded below;
/// lower_bound() reports the bound for the base part.
class Potential {
 public:
  static Potential zero();
  static Potential constant(double value);
  /// V(p) = omega_sq/2 * |p - center|^2 (coordinate distance).
  static Potential harmonic(double omega_sq, Point center);
  /// V(p) = -depth * exp(-|p - center|^2 / (2 width^2)).
  static Potential gaussian_well(double depth, double width, Point center);
  /// 1-d piecewise-linear table over strictly increasing abscissas;
  /// clamped to the end values outside the range.
  static Potential table(std::vector<double> x, std::vector<double> v);

  Potential with_coupling(double c) const;

  PotentialKind kind() const { return kind_; }
  double curvature_coupling() const { return coupling_; }
  double lower_bound() const { return lower_bound_; }

  /// Base potential V(p); non-finite results raise NumericalError.
  double base(const Point& p) const;

  /// V(p) + c * R(p).
  double effective(const Point& p, const Manifold& m) const;

  /// Stable descriptor for serialization, e.g. "harmonic(1,0)".
  std::string describe() const;

  const std::vector<double>& params() const { return params_; }
  const Point& center() const { return center_; }

 private:
  Potential(PotentialKind k, std::vector<double> params, Point center, double lb)
      : kind_(k), params_(std::move(params)), center_(std::move(center)), lower_bound_(lb) {}

  PotentialKind kind_ = PotentialKind::Zero;
  std::vector<double> params_;
  Point center_;
  std::vector<double> table_x_, table_v_;
  double coupling_ = 0.0;
  double lower_bound_ = 0.0;
};

}  // namespace fkwalk
