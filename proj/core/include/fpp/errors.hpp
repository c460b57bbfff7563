#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

/// A parameter or argument violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine (series, quadrature, transform inversion) failed to
/// reach its tolerance. Carries the best value obtained so far.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double partial_value)
      : std::runtime_error(what), partial_value_(partial_value) {}

  double partial_value() const noexcept { return partial_value_; }

 private:
  double partial_value_;
};

/// A rejection sampler exceeded its iteration cap, or a subordinator variant
/// cannot be sampled exactly.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite-difference or quadrature grid is too coarse for the requested
/// evaluation point.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, double suggested_step)
      : std::runtime_error(what), suggested_step_(suggested_step) {}

  double suggested_step() const noexcept { return suggested_step_; }

 private:
  double suggested_step_;
};

namespace detail {

[[noreturn]] void throw_domain(const std::string& where, const std::string& constraint);

}  // namespace detail

}  // namespace fpp
