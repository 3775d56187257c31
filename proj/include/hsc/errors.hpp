#pragma once

#include <stdexcept>
#include <string>

namespace hsc {

/// Argument outside the region where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure stopped before meeting its tolerance. The best
/// value reached so far and its error estimate travel with the exception.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double partial, double err_est)
      : std::runtime_error(what), partial_(partial), err_est_(err_est) {}

  double partial() const noexcept { return partial_; }
  double err_est() const noexcept { return err_est_; }

 private:
  double partial_;
  double err_est_;
};

/// Malformed request (unknown id, empty grid, bad flag combination).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hsc
