#pragma once

#include <stdexcept>
#include <string>

namespace hrc {

/// Invalid parameter passed to a public operation (bad dimension, negative
/// shift, out-of-range index, malformed input file...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A formula was evaluated outside the set where it is defined.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A discretisation is too coarse for the amount of spectrum requested.
class ResolutionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent evaluations of the same quantity disagree.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input is structurally valid but degenerate (e.g. a zero denominator).
class DegenerateInputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string &what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

private:
  double estimate_;
  double error_bound_;
};

} // namespace hrc
