#ifndef RMTSPACING_ERRORS_HPP_
#define RMTSPACING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rmtspacing {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed request: bad grid, bad counts, missing parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm failed to converge or hit a singular system.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of subdivision budget. Carries the partial
/// result so callers can decide whether it is still usable.
class QuadratureFailure : public NumericFailure {
 public:
  QuadratureFailure(const std::string& what, double partial_value,
                    double error_estimate)
      : NumericFailure(what),
        partial_value_(partial_value),
        error_estimate_(error_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

/// A density failed a normalization audit.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rmtspacing

#endif  // RMTSPACING_ERRORS_HPP_
