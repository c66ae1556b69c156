#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logo/domain.hpp"

namespace logo {

/// Objective in original units, maximization convention.
using Objective = std::function<double(std::span<const double>)>;

struct ObjectiveSpec {
  std::string name;
  Domain domain;
  Objective evaluator;
  double f_star;
  std::string f_star_note;

  std::size_t dim() const noexcept { return domain.dim(); }
};

double eval_sin1(double x);
double eval_sin2(double x1, double x2);

/// Negated classical minimization benchmarks: peaks, branin, rosenbrock2,
/// rosenbrock10, hartman3, hartman6, shekel5, shekel7, shekel10.
/// Throws ConfigError for any other name.
double eval_standard(std::string_view name, std::span<const double> point);

/// Registry lookup. Throws ConfigError for unknown names.
const ObjectiveSpec& find_objective(std::string_view name);
const std::vector<ObjectiveSpec>& objective_registry();

/// Relative gap |(f* - f+) / f*|, or the absolute gap when f* = 0.
double error_metric(double f_star, double f_plus);

/// Thread-safe call counter around a spec's evaluator.
class CountingObjective {
 public:
  explicit CountingObjective(ObjectiveSpec inner) : inner_(std::move(inner)) {}

  double operator()(std::span<const double> point) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.evaluator(point);
  }

  std::size_t calls() const noexcept { return calls_.load(std::memory_order_relaxed); }
  const ObjectiveSpec& spec() const noexcept { return inner_; }

 private:
  ObjectiveSpec inner_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace logo
