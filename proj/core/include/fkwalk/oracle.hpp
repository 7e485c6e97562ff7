#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fkwalk/errors.hpp"
#include "fkwalk/potential.hpp"

namespace fkwalk {

/// Free heat kernel on the line: (2 pi t)^(-1/2) exp(-(q2-q1)^2 / 2t).
double free_line_kernel(double q1, double q2, double t);

/// Wrapped Gaussian on a circle of radius r, per unit arc length. The image
/// sum is truncated when terms fall below tol; symmetric pairs are added
/// outward from the dominant image.
double circle_kernel(double theta1, double theta2, double t, double r, double tol = 1e-12);

/// Heat kernel on the round 2-sphere of radius r at geodesic angle gamma,
/// per unit area: sum over l of (2l+1)/(4 pi r^2) e^{-l(l+1)t/2r^2} P_l(cos gamma).
/// Raises TruncationError when the reported l_max tail bound exceeds 1e-10;
/// the achieved bound is written to tail_bound when given.
double sphere_kernel(double gamma, double t, double r, int l_max = 50,
                     double* tail_bound = nullptr);

/// Dense propagator for -1/2 d^2/dq^2 + V on a uniform grid over [a,b],
/// either periodic (circle of circumference b-a) or Dirichlet-truncated.
/// matrix holds kernel values per unit length: sum_j matrix[i][j] * spacing
/// is the row mass (1 within 1e-6 for V = 0 away from Dirichlet walls).
struct GridPropagator {
  double a = 0, b = 0;
  bool periodic = false;
  double t = 0;
  std::size_t size = 0;
  double spacing = 0;
  std::vector<double> grid;    // size points
  std::vector<double> matrix;  // size * size, row major

  double at(std::size_t i, std::size_t j) const { return matrix[i * size + j]; }
  /// Index of the grid point nearest q.
  std::size_t nearest(double q) const;
  /// Kernel value at the grid points nearest (q1, q2).
  double value(double q1, double q2) const { return at(nearest(q1), nearest(q2)); }
  /// spacing-weighted row mass.
  double row_mass(std::size_t i) const;
};

/// Alternating product [exp(-(t/2m) Laplacian) exp(-(t/m)V)]^m; the free
/// factor comes from exact diagonalization of the second-difference matrix.
/// Grid must resolve the slice width: spacing <= sqrt(t/m)/8.
GridPropagator grid_trotter_kernel(double a, double b, bool periodic, const Potential& V,
                                   double t, int slices, std::size_t grid_size);

/// exp(-t H) for H = 1/2 Laplacian + V by dense eigendecomposition.
/// grid_size capped at 4096.
GridPropagator spectral_kernel(double a, double b, bool periodic, const Potential& V,
                               double t, std::size_t grid_size);

/// Finite union of closed intervals (normalized: disjoint, increasing).
struct IntervalUnion {
  std::vector<std::pair<double, double>> parts;

  static IntervalUnion of(std::vector<std::pair<double, double>> parts);
  static IntervalUnion whole_line();  // wide interval standing in for R
  bool contains(double x) const;
  double length() const;
};

/// Bridge cylinder constraint set: paths from q1 at time 0 to q2 at time t,
/// restricted to box k at interior time times[k].
struct CylinderSpec {
  double q1 = 0, q2 = 0;
  double horizon = 1;
  std::vector<double> times;        // strictly increasing, in (0, horizon)
  std::vector<IntervalUnion> boxes; // one per interior time

  static CylinderSpec make(double q1, double q2, double t, std::vector<double> times,
                           std::vector<IntervalUnion> boxes);
};

/// Unnormalized bridge mass of the cylinder set: nested quadrature of the
/// product of free kernels over the boxes, absolute tolerance tol. Total
/// mass (all boxes the whole line) is free_line_kernel(q1, q2, t).
/// At most 4 interior times.
double cylinder_measure(const CylinderSpec& spec, double tol = 1e-8);

}  // namespace fkwalk
