#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slicefock {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A power series could not be summed to tolerance within the degree cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A quadrature sample was not finite.
class IntegrandOverflow : public Error {
 public:
  IntegrandOverflow(const std::string& what, double radius, double angle)
      : Error(what), radius_(radius), angle_(angle) {}
  double radius() const noexcept { return radius_; }
  double angle() const noexcept { return angle_; }

 private:
  double radius_;
  double angle_;
};

/// The Gaussian-weighted integral diverges: the function is not in the space.
class NotInSpaceError : public Error {
 public:
  using Error::Error;
};

/// The outer radial nodes carry more of the integral than the tail tolerance allows.
class TailToleranceError : public Error {
 public:
  using Error::Error;
};

/// A Gram or least-squares matrix is numerically singular.
class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& what, double condition, int leading_minor)
      : Error(what), condition_(condition), leading_minor_(leading_minor) {}
  double condition() const noexcept { return condition_; }
  /// Size of the first leading principal minor that failed, or -1 if unknown.
  int leading_minor() const noexcept { return leading_minor_; }

 private:
  double condition_;
  int leading_minor_;
};

/// An iterative solver stopped at its iteration cap. Carries the best iterate
/// as packed real coefficients (w, x, y, z per degree).
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, double best_value, std::vector<double> best_iterate)
      : Error(what), best_value_(best_value), best_iterate_(std::move(best_iterate)) {}
  double best_value() const noexcept { return best_value_; }
  const std::vector<double>& best_iterate() const noexcept { return best_iterate_; }

 private:
  double best_value_;
  std::vector<double> best_iterate_;
};

}  // namespace slicefock
