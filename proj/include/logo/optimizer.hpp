#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "logo/domain.hpp"
#include "logo/objectives.hpp"
#include "logo/search.hpp"

namespace logo {

struct StopCondition {
  /// Stop once this many objective calls have been made.
  std::optional<std::size_t> max_evaluations;
  std::optional<std::size_t> max_divisions;
  /// Stop once error_metric(f_star, best) < target_error.
  std::optional<double> target_error;
  std::optional<double> f_star;
};

struct OptimizerConfig {
  WidthMode width = AdaptiveWidth{};
  HmaxSchedule hmax = HmaxSchedule::WSqrtMinusW;
  StopCondition stop;

  /// Throws ConfigError when the width mode is invalid, no stopping rule is
  /// given, or a target error comes without f_star.
  void validate() const;
};

/// One Select/Divide/Evaluate/Group event.
struct DivisionRecord {
  std::size_t n = 0;  ///< divisions so far, including this one
  std::size_t evals = 0;
  std::size_t iteration = 0;
  int k = 0;
  int w = 1;
  CellId cell = 0;
  int depth = 0;
  double selected_value = 0.0;
  double left_value = 0.0;
  double right_value = 0.0;
  double best_value = 0.0;

  bool operator==(const DivisionRecord&) const = default;
};

struct IterationRecord {
  std::size_t iteration = 0;
  std::size_t divisions = 0;  ///< performed during this iteration
  std::size_t n = 0;
  std::size_t evals = 0;
  double best_value = 0.0;
  int w = 1;

  bool operator==(const IterationRecord&) const = default;
};

struct RunResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  std::size_t divisions = 0;
  std::size_t evaluations = 0;
  bool target_reached = false;
  std::vector<DivisionRecord> trace;
  std::vector<IterationRecord> iterations;
};

using DivisionObserver = std::function<void(const DivisionRecord&)>;

/// Runs the partitioning search on `objective` (original units, maximized).
/// Throws EvaluationError when the objective returns a non-finite value.
RunResult run(const Objective& objective, const Domain& domain, const OptimizerConfig& config,
              const DivisionObserver& observer = {});

/// Shared stopping test, evaluated after the root evaluation and after every division.
bool should_stop(const StopCondition& stop, std::size_t evaluations, std::size_t divisions,
                 double best_value);

/// Evaluates `objective` at a unit-cube point. Throws EvaluationError on a
/// non-finite result.
double evaluate_checked(const Objective& objective, const Domain& domain,
                        std::span<const double> unit_point);

}  // namespace logo
