#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "logo/domain.hpp"
#include "logo/optimizer.hpp"

namespace logo::planner {

using State = std::vector<double>;

enum class HorizonMode { Finite, Infinite };

/// Deterministic MDP with pure transition and reward.
struct DeterministicMDP {
  std::string name;
  State s0;
  std::function<void(State&, int)> transition;  ///< updates the state in place
  std::function<double(const State&, int)> reward;
  double gamma = 1.0;
  HorizonMode mode = HorizonMode::Finite;
  /// Finite mode: the horizon H. Infinite mode: hard cap on simulated steps.
  std::size_t horizon = 10000;
  /// Upper bound on any single-step reward.
  double r_max = 0.0;
  /// Infinite mode only: bound on |R| for the convergence test (NaN: use |r_max|).
  double reward_bound = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 1e-9;

  void validate() const;  // ConfigError
};

/// Parameterized policy family {pi_x : x in omega}; `act(x, s)` is pi_x(s).
struct PolicySpace {
  Domain omega;
  std::function<int(std::span<const double>, const State&)> act;
};

struct EvaluationOutcome {
  double value = 0.0;        ///< discounted return accumulated at exit
  std::size_t steps_used = 0;  ///< transitions simulated
  bool pruned = false;
};

/// Discounted return of pi_x from s0 (x in original coordinates).
double evaluate_policy_full(const DeterministicMDP& mdp, const PolicySpace& space,
                            std::span<const double> x);
EvaluationOutcome rollout_full(const DeterministicMDP& mdp, const PolicySpace& space,
                               std::span<const double> x);

/// Optimistic bound on the return still to come after step t.
double remaining_upper_bound(std::size_t t, const DeterministicMDP& mdp);

/// Rollout that stops as soon as the optimistic total falls below v_plus - L.
EvaluationOutcome evaluate_policy_pruned(const DeterministicMDP& mdp, const PolicySpace& space,
                                         std::span<const double> x, double v_plus, double L);

/// Infinite L disables pruning and clamping.
struct PlanConfig {
  OptimizerConfig optimizer;
  double L = std::numeric_limits<double>::infinity();

  void validate() const;
};

struct EvalRecord {
  CellId cell = 0;
  std::vector<double> x;
  double v_plus = 0.0;  ///< incumbent the evaluation was pruned against
  EvaluationOutcome outcome;
};

struct PlanRecord {
  DivisionRecord division;
  std::size_t m_steps = 0;  ///< cumulative simulated steps after this division
  bool operator==(const PlanRecord&) const = default;
};

struct PlanResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  std::size_t divisions = 0;
  std::size_t evaluations = 0;
  std::size_t m_steps = 0;
  std::size_t max_eval_steps = 0;  ///< largest steps_used of a single evaluation
  std::size_t pruned = 0;
  std::size_t clamped = 0;  ///< cell values raised to V+ - L over the run
  std::vector<PlanRecord> trace;
  std::vector<IterationRecord> iterations;
  std::vector<EvalRecord> evals;
};

using PlanObserver = std::function<void(const PlanRecord&)>;

PlanResult logo_op_run(const DeterministicMDP& mdp, const PolicySpace& space,
                       const PlanConfig& config, const PlanObserver& observer = {});

/// floor(m / (2 H'_max)) <= n.
bool step_accounting_holds(std::size_t n, std::size_t m, std::size_t max_eval_steps);

struct PlanningProblem {
  DeterministicMDP mdp;
  PolicySpace space;
};

/// Containment venting toy: pressure builds while idle; venting releases
/// airborne inventory in proportion to the vented pressure. Inventory spikes
/// during a source pulse and settles by deposition. Policy: vent (filtered)
/// when inventory <= x1 and pressure >= x2. Above the pressure cap venting is
/// forced and unfiltered.
struct VentWorldConfig {
  std::size_t horizon = 10000;
  double growth = 1.0;          ///< pressure gain per idle step
  double cap = 800.0;           ///< forced-vent pressure
  double vent_fraction = 0.01;  ///< share of pressure released per vent step
  double deposition = 0.002;    ///< inventory decay per step
  double background = 0.02;     ///< steady inventory source per step
  double pulse_rate = 1.0;
  std::size_t pulse_start = 3000;
  std::size_t pulse_end = 3200;
  double release_scale = 1e-3;  ///< release = scale * inventory * vented pressure
  double vent_cost = 0.03;      ///< fixed penalty per vent step
  double unfiltered_factor = 10.0;  ///< release multiplier for forced vents
  double x1_max = 150.0;
  double x2_max = 800.0;

  void validate() const;
};

PlanningProblem vent_world(const VentWorldConfig& config = {});

/// Constant reward, single state; the policy parameter is ignored.
PlanningProblem geometric_mdp(double reward = 1.0, double gamma = 0.5, std::size_t horizon = 3,
                              HorizonMode mode = HorizonMode::Finite);

/// Named fixtures: "vent-world", "geometric".
PlanningProblem find_mdp(const std::string& name);

}  // namespace logo::planner
