// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "logo/cli.hpp"
#include "logo/objectives.hpp"
#include "logo/optimizer.hpp"
#include "logo/parallel.hpp"
#include "logo/planner.hpp"
#include "logo/soo.hpp"
#include "logo/theory.hpp"
#include "partition_check.hpp"

using namespace logo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

OptimizerConfig to_target(const ObjectiveSpec& spec, WidthMode width, std::size_t nmax) {
  OptimizerConfig cfg;
  cfg.width = std::move(width);
  cfg.stop.max_evaluations = nmax;
  cfg.stop.target_error = 1e-4;
  cfg.stop.f_star = spec.f_star;
  return cfg;
}

struct Row {
  const char* name;
  std::size_t logo;
  std::size_t soo;  // 0: SOO must fail within 8000
};

const std::vector<Row> kTable = {
    {"sin1", 17, 57},          {"sin2", 45, 271},        {"peaks", 35, 141},
    {"branin", 85, 339},       {"rosenbrock2", 137, 491}, {"hartman3", 65, 359},
    {"shekel5", 157, 1101},    {"shekel7", 157, 1117},   {"shekel10", 197, 1117},
    {"hartman6", 161, 1759},   {"rosenbrock10", 1793, 0},
};

void criterion1() {
  bool ok = true;
  std::string detail;
  for (const Row& row : kTable) {
    const ObjectiveSpec& spec = find_objective(row.name);
    const auto start = Clock::now();
    const RunResult r = run(spec.evaluator, spec.domain, to_target(spec, AdaptiveWidth{}, 20000));
    const double secs = seconds_since(start);
    const bool row_ok = r.target_reached && r.evaluations <= 2 * row.logo && secs < 60.0;
    ok = ok && row_ok;
    detail += std::string(row.name) + "=" + (r.target_reached ? std::to_string(r.evaluations) : "NA") +
              "/" + std::to_string(2 * row.logo) + (row_ok ? "" : "(x)") + " ";
  }
  report(1, "adaptive LOGO evaluations within 2x of the reference counts", ok, detail);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  for (const Row& row : kTable) {
    const ObjectiveSpec& spec = find_objective(row.name);
    const RunResult r = run_soo(spec.evaluator, spec.domain, to_target(spec, FixedWidth{1}, 8000));
    const bool row_ok = row.soo == 0 ? (!r.target_reached && r.evaluations <= 8001)
                                     : (r.target_reached && r.evaluations <= 2 * row.soo);
    ok = ok && row_ok;
    detail += std::string(row.name) + "=" + (r.target_reached ? std::to_string(r.evaluations) : "NA") +
              (row_ok ? "" : "(x)") + " ";
  }
  report(2, "SOO evaluations within 2x of the reference, rosenbrock10 unsolved in 8000", ok, detail);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"sin1", "sin2", "branin"}) {
    const ObjectiveSpec& spec = find_objective(name);
    OptimizerConfig cfg;
    cfg.width = FixedWidth{1};
    cfg.hmax = HmaxSchedule::SqrtMinusW;
    cfg.stop.max_divisions = 500;
    const RunResult a = run_soo(spec.evaluator, spec.domain, cfg);
    const RunResult b = run(spec.evaluator, spec.domain, cfg);
    const bool same = a.trace == b.trace && a.trace.size() == 500 && a.best_point == b.best_point;
    ok = ok && same;
    detail += std::string(name) + (same ? "=identical " : "=differs ");
  }
  report(3, "SOO trace equals LOGO with w=1 over 500 divisions", ok, detail);
}

void criterion4() {
  const ObjectiveSpec& spec = find_objective("sin1");
  constexpr int kGrid = 10000000;
  double slope = 0.0;
  double prev = eval_sin1(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double x = static_cast<double>(i) / kGrid;
    const double v = eval_sin1(x);
    slope = std::max(slope, std::abs(v - prev) * kGrid);
    prev = v;
  }
  theory::BoundParams bp;
  bp.smoothness = {1.05 * slope, 1.0, 2.0, 1};
  bool ok = true;
  double tightest = std::numeric_limits<double>::infinity();
  for (HmaxSchedule schedule : {HmaxSchedule::SqrtMinusW, HmaxSchedule::WSqrtMinusW}) {
    for (int w : {1, 3}) {
      OptimizerConfig cfg;
      cfg.width = FixedWidth{w};
      cfg.hmax = schedule;
      cfg.stop.max_divisions = 2000;
      const RunResult r = run(spec.evaluator, spec.domain, cfg);
      bp.w = w;
      bp.w_prime = schedule == HmaxSchedule::SqrtMinusW ? 1 : w;
      for (const DivisionRecord& d : r.trace) {
        const double loss = spec.f_star - d.best_value;
        const double bound = theory::theorem2_bound(static_cast<double>(d.n), bp);
        tightest = std::min(tightest, bound - loss);
        if (loss > bound) ok = false;
      }
    }
  }
  report(4, "finite-time loss bound holds on sin1 for n <= 2000", ok,
         "b=" + fmt(bp.smoothness.b) + " min(bound-loss)=" + fmt(tightest));
}

void criterion5() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> len(1, 30);
  bool ok = true;
  std::string why;
  int sequences = 0;
  for (int D : {1, 2, 3, 6}) {
    for (int i = 0; i < 10000; ++i) {
      const check::PartitionReport rep = check::random_partition(D, len(rng), rng);
      ++sequences;
      if (!rep.ok && ok) {
        ok = false;
        why = "D=" + std::to_string(D) + ": " + rep.why;
      }
    }
  }
  report(5, "random division sequences keep an exact partition", ok,
         std::to_string(sequences) + " sequences" + (ok ? "" : "; " + why));
}

struct VentRuns {
  planner::PlanningProblem problem = planner::vent_world();
  planner::PlanResult pruned;
};

void criterion6(VentRuns& v) {
  const auto start = Clock::now();
  const planner::PlanningProblem& p = v.problem;
  planner::PlanConfig cfg;
  cfg.optimizer.stop.max_divisions = 500;
  const planner::PlanResult full = planner::logo_op_run(p.mdp, p.space, cfg);
  Objective f = [&](std::span<const double> x) { return planner::evaluate_policy_full(p.mdp, p.space, x); };
  const RunResult plain = run(f, p.space.omega, cfg.optimizer);
  bool same = full.trace.size() == plain.trace.size() && full.pruned == 0;
  for (std::size_t i = 0; same && i < full.trace.size(); ++i) same = full.trace[i].division == plain.trace[i];

  cfg.L = 20.0;
  v.pruned = planner::logo_op_run(p.mdp, p.space, cfg);
  bool sound = true;
  for (const planner::EvalRecord& e : v.pruned.evals) {
    if (!e.outcome.pruned) continue;
    if (!(planner::evaluate_policy_full(p.mdp, p.space, e.x) < e.v_plus - cfg.L + 1e-12)) sound = false;
  }
  const bool smaller = v.pruned.m_steps < full.m_steps;
  const bool accounting =
      planner::step_accounting_holds(full.divisions, full.m_steps, full.max_eval_steps) &&
      planner::step_accounting_holds(v.pruned.divisions, v.pruned.m_steps, v.pruned.max_eval_steps);
  const double secs = seconds_since(start);
  report(6, "vent-world H=10000: trace, pruning soundness, savings, step accounting",
         same && sound && smaller && accounting && secs < 30.0,
         std::string("Linf=plain:") + (same ? "yes" : "no") + " sound:" + (sound ? "yes" : "no") +
             " pruned=" + std::to_string(v.pruned.pruned) + " m(L=20)=" + std::to_string(v.pruned.m_steps) +
             " m(inf)=" + std::to_string(full.m_steps) + " accounting:" + (accounting ? "yes" : "no") +
             " " + fmt(secs, 3) + "s");
}

void criterion7(const VentRuns& v) {
  const planner::PlanningProblem& p = v.problem;
  constexpr int kSide = 200;
  const auto& lo = p.space.omega.lower();
  const auto& hi = p.space.omega.upper();
  // Rows are independent; split them across threads.
  std::vector<double> row_best(kSide, -std::numeric_limits<double>::infinity());
  {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int i = static_cast<int>(t); i < kSide; i += static_cast<int>(threads)) {
          for (int j = 0; j < kSide; ++j) {
            const std::vector<double> x{lo[0] + (hi[0] - lo[0]) * (i + 0.5) / kSide,
                                        lo[1] + (hi[1] - lo[1]) * (j + 0.5) / kSide};
            row_best[i] = std::max(row_best[i], planner::evaluate_policy_full(p.mdp, p.space, x));
          }
        }
      });
    }
  }
  const double grid = *std::max_element(row_best.begin(), row_best.end());
  planner::PlanConfig cfg;
  cfg.optimizer.stop.max_divisions = 500;
  const planner::PlanResult r = planner::logo_op_run(p.mdp, p.space, cfg);
  const double err = (grid - r.best_value) / std::abs(grid);
  report(7, "LOGO-OP after 500 divisions is within 1e-3 of the 200x200 grid optimum", err <= 1e-3,
         "grid=" + fmt(grid, 10) + " logo-op=" + fmt(r.best_value, 10) + " error=" + fmt(err, 3));
}

void criterion8(const VentRuns& v) {
  const planner::PlanningProblem& p = v.problem;
  parallel::ParallelConfig pc;
  pc.optimizer.stop.max_divisions = 500;
  pc.L = 20.0;
  pc.workers = 1;
  const parallel::ParallelResult one = parallel::plogo_op_run(p.mdp, p.space, pc);
  const bool serial_equal = one.trace == v.pruned.trace && one.best_value == v.pruned.best_value;

  pc.workers = 8;
  const parallel::ParallelResult many = parallel::plogo_op_run(p.mdp, p.space, pc);
  bool recomputed = many.evaluations == many.tasks.size();
  for (const parallel::TaskLogEntry& t : many.tasks) {
    const planner::EvaluationOutcome o = planner::evaluate_policy_pruned(p.mdp, p.space, t.x, t.v_plus, pc.L);
    if (o.value != t.value || o.steps_used != t.steps || o.pruned != t.pruned) recomputed = false;
  }

  const ObjectiveSpec& spec = find_objective("branin");
  parallel::TaskEvaluator slow = [&spec](std::span<const double> x, double) {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    return planner::EvaluationOutcome{spec.evaluator(x), 1, false};
  };
  parallel::ParallelConfig tc;
  tc.optimizer.stop.max_evaluations = 1000000;
  tc.wall_budget_ms = 2000.0;
  tc.workers = 1;
  const std::size_t serial_evals = parallel::parallel_run(spec.domain, slow, tc).evaluations;
  tc.workers = 8;
  const std::size_t parallel_evals = parallel::parallel_run(spec.domain, slow, tc).evaluations;
  const bool speedup = parallel_evals >= 4 * serial_evals;

  report(8, "pLOGO-OP: k=1 equals serial, commits recompute, k=8 throughput",
         serial_equal && recomputed && speedup,
         std::string("k1=serial:") + (serial_equal ? "yes" : "no") + " recompute:" +
             (recomputed ? "yes" : "no") + " evals(k=1)=" + std::to_string(serial_evals) +
             " evals(k=8)=" + std::to_string(parallel_evals));
}

std::string cli_csv(std::vector<std::string> args) {
  args.insert(args.begin(), "logoopt");
  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  std::ostringstream out, err;
  cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  // Strip the wall_ms column when present.
  std::istringstream in(out.str());
  std::string line, kept;
  int wall = -1;
  bool header = true;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; std::getline(cells, cell, ','); ++i) {
      if (header && cell == "wall_ms") wall = i;
      if (i != wall) kept += cell + ',';
    }
    kept += '\n';
    header = false;
  }
  return kept;
}

void criterion9() {
  const std::vector<std::vector<std::string>> runs = {
      {"bench", "shekel5"},
      {"bench", "hartman6", "--algo", "soo", "--nmax", "501"},
      {"plan", "--L", "20", "--nmax", "301"},
      {"plan", "--L", "inf", "--nmax", "101", "--workers", "1"},
      {"bound", "--b", "2", "--D", "2", "--w", "3", "--nmax", "200"},
  };
  bool ok = true;
  std::string detail;
  for (const auto& args : runs) {
    const std::string a = cli_csv(args);
    const std::string b = cli_csv(args);
    const bool same = a == b && a.size() > 20;
    ok = ok && same;
    detail += args[0] + ":" + args[1] + (same ? "=same " : "=differs ");
  }
  report(9, "CSV output is deterministic apart from wall time", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  VentRuns vent;
  criterion6(vent);
  criterion7(vent);
  criterion8(vent);
  criterion9();
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
