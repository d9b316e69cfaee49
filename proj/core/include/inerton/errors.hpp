#pragma once

#include <stdexcept>
#include <string>

namespace inerton {

/// Physical parameters outside their admissible domain (v0 >= c, M0 <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called with arguments that violate its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coupled equations divide by the emission speed; v0 == 0 has no dynamics.
class DegenerateSystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical integration could not continue. Carries the last time at which
/// the state was known to be good.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double last_good_time)
      : std::runtime_error(what), last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace inerton
