#include "logo/planner.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "logo/errors.hpp"
#include "logo/search.hpp"

namespace logo::planner {

void DeterministicMDP::validate() const {
  if (!transition || !reward) throw ConfigError("MDP needs a transition and a reward");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("discount must lie in (0,1]");
  if (horizon == 0) throw ConfigError("horizon must be positive");
  if (!std::isfinite(r_max)) throw ConfigError("R_max must be finite");
  if (mode == HorizonMode::Finite && r_max < 0.0) {
    // (H - t) R_max is only an upper bound on the tail when R_max >= 0.
    throw ConfigError("finite-horizon R_max must be non-negative");
  }
  if (mode == HorizonMode::Infinite && gamma >= 1.0) {
    throw ConfigError("infinite horizon needs a discount below 1");
  }
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

double remaining_upper_bound(std::size_t t, const DeterministicMDP& mdp) {
  if (mdp.mode == HorizonMode::Infinite) {
    if (mdp.gamma >= 1.0) throw ConfigError("infinite horizon needs a discount below 1");
    return std::pow(mdp.gamma, static_cast<double>(t + 1)) / (1.0 - mdp.gamma) * mdp.r_max;
  }
  if (t >= mdp.horizon) return 0.0;
  return static_cast<double>(mdp.horizon - t) * mdp.r_max;
}

namespace {

EvaluationOutcome rollout(const DeterministicMDP& mdp, const PolicySpace& space,
                          std::span<const double> x, double floor) {
  if (!space.omega.contains(x)) throw DomainError("policy parameter outside its domain");
  const bool infinite = mdp.mode == HorizonMode::Infinite;
  const double magnitude = std::isnan(mdp.reward_bound) ? std::abs(mdp.r_max) : mdp.reward_bound;
  const double tail_scale = infinite ? magnitude / (1.0 - mdp.gamma) : 0.0;

  EvaluationOutcome out;
  State s = mdp.s0;
  double z2 = 1.0;
  for (std::size_t t = 0; t < mdp.horizon; ++t) {
    const int a = space.act(x, s);
    const double r = mdp.reward(s, a);
    if (!std::isfinite(r)) {
      throw EvaluationError("non-finite reward", std::vector<double>(x.begin(), x.end()));
    }
    out.value += z2 * r;
    z2 *= mdp.gamma;
    mdp.transition(s, a);
    out.steps_used = t + 1;
    if (t + 1 == mdp.horizon) break;
    if (infinite && z2 * tail_scale < mdp.tolerance) break;
    if (out.value + remaining_upper_bound(t, mdp) < floor) {
      out.pruned = true;
      break;
    }
  }
  return out;
}

}  // namespace

EvaluationOutcome rollout_full(const DeterministicMDP& mdp, const PolicySpace& space,
                               std::span<const double> x) {
  mdp.validate();
  return rollout(mdp, space, x, -std::numeric_limits<double>::infinity());
}

double evaluate_policy_full(const DeterministicMDP& mdp, const PolicySpace& space,
                            std::span<const double> x) {
  return rollout_full(mdp, space, x).value;
}

EvaluationOutcome evaluate_policy_pruned(const DeterministicMDP& mdp, const PolicySpace& space,
                                         std::span<const double> x, double v_plus, double L) {
  mdp.validate();
  if (!(L >= 0.0)) throw ConfigError("L must be non-negative");
  return rollout(mdp, space, x, v_plus - L);
}

void PlanConfig::validate() const {
  optimizer.validate();
  if (!(L >= 0.0)) throw ConfigError("L must be non-negative");
}

bool step_accounting_holds(std::size_t n, std::size_t m, std::size_t max_eval_steps) {
  if (max_eval_steps == 0) return m == 0;
  return m / (2 * max_eval_steps) <= n;
}

PlanResult logo_op_run(const DeterministicMDP& mdp, const PolicySpace& space,
                       const PlanConfig& config, const PlanObserver& observer) {
  config.validate();
  mdp.validate();
  const Domain& omega = space.omega;
  LogoSearch search(omega.dim(), config.optimizer.width, config.optimizer.hmax);
  const bool prune = std::isfinite(config.L);

  PlanResult out;
  double v_plus = -std::numeric_limits<double>::infinity();

  auto evaluate = [&](const Cell& cell) {
    std::vector<double> x = denormalize(cell.center, omega);
    EvaluationOutcome o = rollout(mdp, space, x, prune ? v_plus - config.L
                                                       : -std::numeric_limits<double>::infinity());
    out.m_steps += o.steps_used;
    out.max_eval_steps = std::max(out.max_eval_steps, o.steps_used);
    out.pruned += o.pruned ? 1 : 0;
    ++out.evaluations;
    out.evals.push_back({cell.id, std::move(x), v_plus, o});
    return o.value;
  };
  auto consider = [&](const Cell& cell) {
    if (cell.value > out.best_value) {
      out.best_value = cell.value;
      out.best_x = denormalize(cell.center, omega);
    }
  };

  const Cell root = unit_cell(omega.dim(), 0);
  out.best_value = evaluate(root);
  out.best_x = denormalize(root.center, omega);
  v_plus = out.best_value;
  search.seed(out.best_value);

  const StopCondition& stop = config.optimizer.stop;
  bool stopped = should_stop(stop, out.evaluations, 0, out.best_value);
  double prev_iteration_best = out.best_value;
  while (!stopped) {
    std::optional<Division> division = search.advance();
    if (!division) {
      out.iterations.push_back({search.iteration(), search.divisions_this_iteration(),
                                search.divisions(), out.evaluations, out.best_value,
                                search.width()});
      if (prune) out.clamped += search.ledger().clamp_below(v_plus - config.L);
      search.end_iteration(out.best_value > prev_iteration_best);
      prev_iteration_best = out.best_value;
      continue;
    }

    Trisection& t = division->children;
    // Both children are pruned against the incumbent from before the division.
    t.left.value = evaluate(t.left);
    t.right.value = evaluate(t.right);
    search.ledger().set_value(t.left.id, t.left.value);
    search.ledger().set_value(t.right.id, t.right.value);
    consider(t.left);
    consider(t.right);
    v_plus = out.best_value;

    PlanRecord rec{{search.divisions(), out.evaluations, division->iteration, division->k,
                    division->w, division->parent, division->depth, division->parent_value,
                    t.left.value, t.right.value, out.best_value},
                   out.m_steps};
    out.trace.push_back(rec);
    if (observer) observer(rec);

    stopped = should_stop(stop, out.evaluations, search.divisions(), out.best_value);
  }
  out.divisions = search.divisions();
  return out;
}

// --- fixtures ---------------------------------------------------------------

void VentWorldConfig::validate() const {
  if (horizon == 0) throw ConfigError("vent-world horizon must be positive");
  if (!(growth > 0.0)) throw ConfigError("pressure growth must be positive");
  if (!(cap > 0.0)) throw ConfigError("pressure cap must be positive");
  if (!(vent_fraction > 0.0 && vent_fraction < 1.0)) throw ConfigError("vent fraction must lie in (0,1)");
  if (!(deposition > 0.0 && deposition < 1.0)) throw ConfigError("deposition must lie in (0,1)");
  if (!(background >= 0.0) || !(pulse_rate >= 0.0)) throw ConfigError("sources must be non-negative");
  if (pulse_end < pulse_start) throw ConfigError("pulse ends before it starts");
  if (!(release_scale > 0.0) || !(vent_cost >= 0.0) || !(unfiltered_factor >= 1.0)) {
    throw ConfigError("invalid release constants");
  }
  if (!(x1_max > 0.0) || !(x2_max > 0.0)) throw ConfigError("policy box must be non-empty");
}

PlanningProblem vent_world(const VentWorldConfig& c) {
  c.validate();
  // State: pressure, airborne inventory, clock.
  enum { kP = 0, kI = 1, kT = 2 };
  auto vents = [c](const State& s, int a) { return a == 1 || s[kP] > c.cap; };
  auto forced = [c](const State& s, int a) { return a != 1 && s[kP] > c.cap; };

  DeterministicMDP mdp;
  mdp.name = "vent-world";
  mdp.s0 = {0.0, c.background / c.deposition, 0.0};
  mdp.transition = [c, vents](State& s, int a) {
    if (vents(s, a)) {
      s[kP] *= 1.0 - c.vent_fraction;
    } else {
      s[kP] += c.growth;
    }
    const auto t = static_cast<std::size_t>(s[kT]);
    const double source = c.background + (t >= c.pulse_start && t < c.pulse_end ? c.pulse_rate : 0.0);
    s[kI] = s[kI] * (1.0 - c.deposition) + source;
    s[kT] += 1.0;
  };
  mdp.reward = [c, vents, forced](const State& s, int a) {
    if (!vents(s, a)) return 0.0;
    const double release = c.release_scale * s[kI] * c.vent_fraction * s[kP];
    return -((forced(s, a) ? c.unfiltered_factor : 1.0) * release + c.vent_cost);
  };
  mdp.gamma = 1.0;
  mdp.mode = HorizonMode::Finite;
  mdp.horizon = c.horizon;
  mdp.r_max = 0.0;

  PolicySpace space{Domain({0.0, 0.0}, {c.x1_max, c.x2_max}),
                    [](std::span<const double> x, const State& s) {
                      return (s[kI] <= x[0] && s[kP] >= x[1]) ? 1 : 0;
                    }};
  return {std::move(mdp), std::move(space)};
}

PlanningProblem geometric_mdp(double reward, double gamma, std::size_t horizon, HorizonMode mode) {
  DeterministicMDP mdp;
  mdp.name = "geometric";
  mdp.s0 = {0.0};
  mdp.transition = [](State& s, int) { s[0] += 1.0; };
  mdp.reward = [reward](const State&, int) { return reward; };
  mdp.gamma = gamma;
  mdp.mode = mode;
  mdp.horizon = horizon;
  mdp.r_max = std::max(reward, 0.0);
  mdp.reward_bound = std::abs(reward);
  mdp.validate();
  PolicySpace space{Domain::cube(1, 0.0, 1.0), [](std::span<const double>, const State&) { return 0; }};
  return {std::move(mdp), std::move(space)};
}

PlanningProblem find_mdp(const std::string& name) {
  if (name == "vent-world") return vent_world();
  if (name == "geometric") return geometric_mdp();
  throw ConfigError("unknown MDP: " + name);
}

}  // namespace logo::planner
