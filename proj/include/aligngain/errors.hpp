#pragma once

#include <stdexcept>
#include <string>

namespace aligngain {

/// Invalid physical or mathematical input (violated precondition).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed species/config input or an unknown parameter name.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure while reading or writing datasets.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical scheme could not reach the requested tolerance.
/// Carries the best available estimate and the error actually achieved.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& msg, double best_value, double achieved_error)
      : std::runtime_error(msg + " (best estimate " + std::to_string(best_value) +
                           ", achieved error " + std::to_string(achieved_error) + ")"),
        best_value_(best_value),
        achieved_error_(achieved_error) {}

  double best_value() const noexcept { return best_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

private:
  double best_value_;
  double achieved_error_;
};

} // namespace aligngain
