#pragma once

#include <stdexcept>
#include <string>

namespace rtoa {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A result exceeds the representable floating-point range.
/// `exponent10` is the estimated base-10 exponent of the offending value.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& msg, double exponent10)
      : Error(msg + " (estimated magnitude 1e" + std::to_string(exponent10) + ")"),
        exponent10(exponent10) {}
  double exponent10;
};

/// A quadrature did not converge to the requested tolerance.
/// Carries the last two successive estimates for diagnosis.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& msg, double last, double previous)
      : Error(msg), last_estimate(last), previous_estimate(previous) {}
  double last_estimate;
  double previous_estimate;
};

/// A semi-infinite integrand grows too fast for its damping weight.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& msg, double growth_rate)
      : Error(msg), growth_rate(growth_rate) {}
  double growth_rate;
};

/// A classical trajectory enters a region where the motion is forbidden.
class ForbiddenRegionError : public Error {
 public:
  ForbiddenRegionError(const std::string& msg, const std::string& segment)
      : Error(msg + " [segment: " + segment + "]"), segment(segment) {}
  std::string segment;
};

/// A configuration value violates a documented invariant.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace rtoa
