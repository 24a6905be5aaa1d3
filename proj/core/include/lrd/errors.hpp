#pragma once

#include <stdexcept>
#include <string>

namespace lrd {

// Invalid argument to a model or plan: wrong range, wrong shape, unknown key.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input data violates a precondition (negative increments where a renewal
// interpretation is required, non-positive values passed to a log fit, ...).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numeric routine failed to converge. Carries the last two
// estimates so callers can report how far apart they were.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double last, double previous)
      : std::runtime_error(what), last_(last), previous_(previous) {}
  explicit numerical_error(const std::string& what)
      : numerical_error(what, 0.0, 0.0) {}
  double last_estimate() const noexcept { return last_; }
  double previous_estimate() const noexcept { return previous_; }

 private:
  double last_;
  double previous_;
};

// A first-passage query ran past the generated horizon: S(n) <= level.
class horizon_error : public std::runtime_error {
 public:
  horizon_error(const std::string& what, double level, double horizon_sum)
      : std::runtime_error(what), level_(level), horizon_sum_(horizon_sum) {}
  double level() const noexcept { return level_; }
  double horizon_sum() const noexcept { return horizon_sum_; }

 private:
  double level_;
  double horizon_sum_;
};

}  // namespace lrd
