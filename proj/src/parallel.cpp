#include "logo/parallel.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "logo/channel.hpp"
#include "logo/errors.hpp"

namespace logo::parallel {

void ParallelConfig::validate() const {
  optimizer.validate();
  if (workers == 0) throw ConfigError("at least one worker is required");
  if (!(L >= 0.0)) throw ConfigError("L must be non-negative");
  if (std::isnan(worst_value)) throw ConfigError("worst value must not be NaN");
  if (wall_budget_ms && !(*wall_budget_ms > 0.0)) throw ConfigError("wall budget must be positive");
}

Master::Master(const Domain& domain, const ParallelConfig& config)
    : domain_(domain), config_(config), search_(domain.dim(), config.optimizer.width, config.optimizer.hmax) {
  config_.validate();
  search_.seed(config_.worst_value);
  const Cell* root = search_.ledger().find(0);
  enqueue(*root, config_.worst_value, kRoot, true);
}

void Master::enqueue(const Cell& cell, double provisional, std::size_t division, bool left) {
  Flight f;
  f.task.id = next_task_++;
  f.task.cell = cell.id;
  f.task.center_origin = cell.center_origin;
  f.task.x = denormalize(cell.center, domain_);
  f.task.provisional = provisional;
  f.task.v_plus = v_plus_;
  f.division = division;
  f.left = left;
  pending_.push_back(std::move(f));
  ++issued_;
}

EvalTask Master::dispatch() {
  if (pending_.empty()) throw ProtocolError("no pending task to dispatch");
  Flight f = std::move(pending_.front());
  pending_.pop_front();
  EvalTask task = f.task;
  in_flight_.emplace(task.id, std::move(f));
  return task;
}

bool Master::budget_spent() const {
  if (halted_) return true;
  const StopCondition& stop = config_.optimizer.stop;
  return should_stop(stop, issued_, search_.divisions(), out_.best_value);
}

bool Master::select() {
  std::optional<Division> d = search_.advance();
  if (!d) {
    close_iteration();
    return false;
  }
  // Children stand in with the parent's value until their own evaluations land.
  const double provisional = d->parent_value;
  search_.ledger().set_value(d->children.left.id, provisional);
  search_.ledger().set_value(d->children.right.id, provisional);

  OpenDivision open;
  DivisionRecord& rec = open.record.division;
  rec.n = search_.divisions();
  rec.iteration = d->iteration;
  rec.k = d->k;
  rec.w = d->w;
  rec.cell = d->parent;
  rec.depth = d->depth;
  rec.selected_value = d->parent_value;
  open_.push_back(open);
  enqueue(d->children.left, provisional, open_.size() - 1, true);
  enqueue(d->children.right, provisional, open_.size() - 1, false);
  return true;
}

void Master::close_iteration() {
  if (std::isfinite(config_.L)) search_.ledger().clamp_below(v_plus_ - config_.L);
  search_.end_iteration(out_.best_value > prev_iteration_best_);
  prev_iteration_best_ = out_.best_value;
}

void Master::commit(const WorkerResult& result) {
  auto where = in_flight_.find(result.id);
  if (where == in_flight_.end()) throw ProtocolError("commit for unknown or finished task");
  Flight f = std::move(where->second);
  in_flight_.erase(where);
  if (result.error) std::rethrow_exception(result.error);

  const planner::EvaluationOutcome& o = result.outcome;
  const Cell* live = search_.ledger().find_by_center(f.task.center_origin);
  if (live == nullptr) throw ProtocolError("committed point has no live cell");
  search_.ledger().set_value(live->id, o.value);

  ++out_.evaluations;
  out_.m_steps += o.steps_used;
  out_.max_eval_steps = std::max(out_.max_eval_steps, o.steps_used);
  if (o.value > out_.best_value) {
    out_.best_value = o.value;
    out_.best_x = f.task.x;
    v_plus_ = o.value;
  }
  out_.tasks.push_back({f.task.id, f.task.cell, f.task.x, f.task.provisional, f.task.v_plus,
                        o.value, o.steps_used, o.pruned});

  if (f.division == kRoot) return;
  OpenDivision& open = open_[f.division];
  DivisionRecord& rec = open.record.division;
  (f.left ? rec.left_value : rec.right_value) = o.value;
  if (--open.outstanding > 0) return;
  rec.evals = out_.evaluations;
  rec.best_value = out_.best_value;
  open.record.m_steps = out_.m_steps;
  out_.trace.push_back(open.record);
  if (observer_) observer_(open.record);
}

ParallelResult parallel_run(const Domain& domain, const TaskEvaluator& evaluator,
                            const ParallelConfig& config, const planner::PlanObserver& observer) {
  Master master(domain, config);
  master.set_observer(observer);

  Channel<EvalTask> tasks;
  Channel<WorkerResult> results;
  std::vector<std::jthread> workers;
  workers.reserve(config.workers);
  for (std::size_t i = 0; i < config.workers; ++i) {
    workers.emplace_back([&] {
      while (std::optional<EvalTask> task = tasks.pop()) {
        WorkerResult r;
        r.id = task->id;
        try {
          r.outcome = evaluator(task->x, task->v_plus);
        } catch (...) {
          r.error = std::current_exception();
        }
        results.push(std::move(r));
      }
    });
  }

  const auto start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    if (!config.wall_budget_ms) return false;
    const std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
    return spent.count() >= *config.wall_budget_ms;
  };

  std::size_t idle = config.workers;
  auto wait_one = [&] {
    std::optional<WorkerResult> r = results.pop();
    ++idle;
    master.commit(*r);
  };

  try {
    while (true) {
      if (over_budget()) {
        master.stop_selecting();
        master.drop_pending();
      }
      while (idle > 0 && master.pending() > 0) {
        tasks.push(master.dispatch());
        --idle;
      }
      if (master.done()) break;
      if (idle > 0 && master.pending() == 0 && !master.budget_spent()) {
        if (master.select()) continue;
        if (master.search().divisions_this_iteration() > 0) continue;
        // A sweep found nothing it could divide; only a commit can change that.
        if (master.in_flight() == 0) break;
        wait_one();
        continue;
      }
      if (master.in_flight() == 0) break;
      wait_one();
    }
  } catch (...) {
    tasks.close();
    throw;
  }
  tasks.close();
  workers.clear();

  ParallelResult out = std::move(master.result());
  out.divisions = master.search().divisions();
  return out;
}

ParallelResult plogo_op_run(const planner::DeterministicMDP& mdp,
                            const planner::PolicySpace& space, const ParallelConfig& config,
                            const planner::PlanObserver& observer) {
  mdp.validate();
  const double L = config.L;
  TaskEvaluator eval = [&mdp, &space, L](std::span<const double> x, double v_plus) {
    return planner::evaluate_policy_pruned(mdp, space, x, v_plus, L);
  };
  return parallel_run(space.omega, eval, config, observer);
}

}  // namespace logo::parallel
