#include "logo/optimizer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "logo/errors.hpp"

namespace logo {

void OptimizerConfig::validate() const {
  logo::validate(width);
  if (!stop.max_evaluations && !stop.max_divisions && !stop.target_error) {
    throw ConfigError("a stopping condition is required");
  }
  if (stop.target_error && !stop.f_star) throw ConfigError("target error needs a known f_star");
  if (stop.target_error && !(*stop.target_error > 0.0)) {
    throw ConfigError("target error must be positive");
  }
}

bool should_stop(const StopCondition& stop, std::size_t evaluations, std::size_t divisions,
                 double best_value) {
  if (stop.max_evaluations && evaluations >= *stop.max_evaluations) return true;
  if (stop.max_divisions && divisions >= *stop.max_divisions) return true;
  if (stop.target_error && stop.f_star &&
      error_metric(*stop.f_star, best_value) < *stop.target_error) {
    return true;
  }
  return false;
}

double evaluate_checked(const Objective& objective, const Domain& domain,
                        std::span<const double> unit_point) {
  const std::vector<double> x = denormalize(unit_point, domain);
  const double value = objective(x);
  if (!std::isfinite(value)) {
    throw EvaluationError("objective returned a non-finite value", x);
  }
  return value;
}

RunResult run(const Objective& objective, const Domain& domain, const OptimizerConfig& config,
              const DivisionObserver& observer) {
  config.validate();
  LogoSearch search(domain.dim(), config.width, config.hmax);

  RunResult out;
  const Cell root = unit_cell(domain.dim(), 0);
  out.best_value = evaluate_checked(objective, domain, root.center);
  out.best_point = denormalize(root.center, domain);
  out.evaluations = 1;
  search.seed(out.best_value);

  auto consider = [&](const Cell& cell) {
    if (cell.value > out.best_value) {
      out.best_value = cell.value;
      out.best_point = denormalize(cell.center, domain);
    }
  };

  bool stopped = should_stop(config.stop, out.evaluations, 0, out.best_value);
  double prev_iteration_best = out.best_value;
  while (!stopped) {
    std::optional<Division> division = search.advance();
    if (!division) {
      out.iterations.push_back({search.iteration(), search.divisions_this_iteration(),
                                search.divisions(), out.evaluations, out.best_value,
                                search.width()});
      // Strict improvement: with ties counted, the monotone incumbent would
      // make every iteration "progress" and pin w at the top of the schedule.
      search.end_iteration(out.best_value > prev_iteration_best);
      prev_iteration_best = out.best_value;
      continue;
    }

    Trisection& t = division->children;
    t.left.value = evaluate_checked(objective, domain, t.left.center);
    t.right.value = evaluate_checked(objective, domain, t.right.center);
    out.evaluations += 2;
    search.ledger().set_value(t.left.id, t.left.value);
    search.ledger().set_value(t.right.id, t.right.value);
    consider(t.left);
    consider(t.right);

    DivisionRecord rec{search.divisions(), out.evaluations, division->iteration, division->k,
                       division->w,        division->parent, division->depth,
                       division->parent_value, t.left.value, t.right.value, out.best_value};
    out.trace.push_back(rec);
    if (observer) observer(rec);

    stopped = should_stop(config.stop, out.evaluations, search.divisions(), out.best_value);
  }

  out.divisions = search.divisions();
  if (config.stop.target_error && config.stop.f_star) {
    out.target_reached = error_metric(*config.stop.f_star, out.best_value) < *config.stop.target_error;
  }
  return out;
}

}  // namespace logo
