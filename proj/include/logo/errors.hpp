#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace logo {

/// Point outside the search domain (original or normalized coordinates).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent configuration: unknown names, invalid constants, bad schedules.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a formula.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Master/worker message out of order (unknown or duplicate task id).
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Objective (or policy rollout) produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

}  // namespace logo
