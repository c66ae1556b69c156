#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "logo/domain.hpp"
#include "logo/optimizer.hpp"
#include "logo/planner.hpp"

namespace logo::parallel {

using TaskId = std::uint64_t;

struct EvalTask {
  TaskId id = 0;
  CellId cell = 0;           ///< cell created by the division
  CellId center_origin = 0;  ///< identifies the point across later divisions
  std::vector<double> x;     ///< original coordinates
  double provisional = 0.0;
  double v_plus = 0.0;  ///< incumbent at division time, for pruning
};

struct WorkerResult {
  TaskId id = 0;
  planner::EvaluationOutcome outcome;
  std::exception_ptr error;
};

/// One line of the run log.
struct TaskLogEntry {
  TaskId id = 0;
  CellId cell = 0;
  std::vector<double> x;
  double provisional = 0.0;
  double v_plus = 0.0;
  double value = 0.0;
  std::size_t steps = 0;
  bool pruned = false;
};

/// Worker-side evaluation: point in original coordinates plus the incumbent
/// snapshot. Must be pure and thread-safe.
using TaskEvaluator =
    std::function<planner::EvaluationOutcome(std::span<const double> x, double v_plus)>;

struct ParallelConfig {
  OptimizerConfig optimizer;
  double L = std::numeric_limits<double>::infinity();
  std::size_t workers = 1;
  /// Stand-in value for the root before its evaluation returns.
  double worst_value = -std::numeric_limits<double>::infinity();
  /// Stop selecting after this much wall time; in-flight tasks still commit.
  std::optional<double> wall_budget_ms;

  void validate() const;
};

struct ParallelResult {
  std::vector<double> best_x;
  double best_value = -std::numeric_limits<double>::infinity();
  std::size_t divisions = 0;
  std::size_t evaluations = 0;  ///< committed
  std::size_t m_steps = 0;
  std::size_t max_eval_steps = 0;
  /// One record per division, emitted once both of its children have committed.
  std::vector<planner::PlanRecord> trace;
  std::vector<TaskLogEntry> tasks;  ///< in commit order
};

/// Master-side bookkeeping: provisional values go into the ledger at division
/// time and are overwritten when the true value commits.
class Master {
 public:
  Master(const Domain& domain, const ParallelConfig& config);

  /// Tasks ready for dispatch, FIFO.
  std::size_t pending() const noexcept { return pending_.size(); }
  std::size_t in_flight() const noexcept { return in_flight_.size(); }

  /// Pops the oldest pending task and marks it in flight.
  EvalTask dispatch();

  /// One Select/Divide step. A division enqueues its two child tasks and
  /// returns true; an exhausted sweep closes the iteration and returns false.
  bool select();

  /// Writes the true value over the provisional one. ProtocolError for an
  /// unknown or already committed task id.
  void commit(const WorkerResult& result);

  /// True once no further selections should be made.
  bool budget_spent() const;
  bool done() const { return budget_spent() && pending_.empty() && in_flight_.empty(); }

  void set_observer(planner::PlanObserver observer) { observer_ = std::move(observer); }
  void stop_selecting() { halted_ = true; }
  void drop_pending() { pending_.clear(); }

  const LogoSearch& search() const noexcept { return search_; }
  ParallelResult& result() noexcept { return out_; }

 private:
  static constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  struct Flight {
    EvalTask task;
    std::size_t division = kRoot;  ///< index into open_, kRoot for the root task
    bool left = true;
  };
  struct OpenDivision {
    planner::PlanRecord record;
    int outstanding = 2;
  };
  void enqueue(const Cell& cell, double provisional, std::size_t division, bool left);
  void close_iteration();

  Domain domain_;
  ParallelConfig config_;
  LogoSearch search_;
  ParallelResult out_;
  std::deque<Flight> pending_;
  std::unordered_map<TaskId, Flight> in_flight_;
  std::vector<OpenDivision> open_;
  TaskId next_task_ = 0;
  std::size_t issued_ = 0;  ///< evaluations handed out so far
  double v_plus_ = -std::numeric_limits<double>::infinity();
  double prev_iteration_best_ = -std::numeric_limits<double>::infinity();
  bool halted_ = false;
  planner::PlanObserver observer_;
};

/// Master/worker run with `config.workers` evaluation threads.
ParallelResult parallel_run(const Domain& domain, const TaskEvaluator& evaluator,
                            const ParallelConfig& config, const planner::PlanObserver& observer = {});

/// pLOGO-OP on an MDP fixture.
ParallelResult plogo_op_run(const planner::DeterministicMDP& mdp,
                            const planner::PolicySpace& space, const ParallelConfig& config,
                            const planner::PlanObserver& observer = {});

}  // namespace logo::parallel
