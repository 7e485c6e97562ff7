#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fkwalk {

/// A point or parameter fell outside the domain an operation is defined on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numerical procedure failed to converge or lost accuracy.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested accuracy could not be reached within the work budget.
class AccuracyError : public NumericalError {
 public:
  AccuracyError(const std::string& what, double achieved)
      : NumericalError(what), achieved_bound(achieved) {}
  double achieved_bound;
};

/// A series truncation bound was violated.
class TruncationError : public NumericalError {
 public:
  explicit TruncationError(const std::string& what) : NumericalError(what) {}
};

/// The requested endpoint is not on the reachable step lattice.
class ReachabilityError : public std::runtime_error {
 public:
  ReachabilityError(const std::string& what, double below, double above)
      : std::runtime_error(what), nearest_below(below), nearest_above(above) {}
  double nearest_below;
  double nearest_above;
};

/// A geodesic step left the chart's domain box.
class ChartExitError : public DomainError {
 public:
  ChartExitError(const std::string& what, std::vector<double> boundary, long step)
      : DomainError(what), boundary_point(std::move(boundary)), step_index(step) {}
  std::vector<double> boundary_point;
  long step_index = -1;
};

/// A size or recursion budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// No sample landed in the bin of a binned estimator.
class DegenerateEstimateError : public std::runtime_error {
 public:
  explicit DegenerateEstimateError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad run configuration (quadrature coverage, grid resolution, flags).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
  std::size_t position;
};

}  // namespace fkwalk
