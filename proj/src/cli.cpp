#include "logo/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logo/errors.hpp"
#include "logo/objectives.hpp"
#include "logo/optimizer.hpp"
#include "logo/parallel.hpp"
#include "logo/planner.hpp"
#include "logo/soo.hpp"
#include "logo/theory.hpp"

namespace logo::cli {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || v <= 0) throw ConfigError("bad width schedule: " + text);
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ConfigError("empty width schedule");
  return out;
}

LogLevel parse_log_level(const std::string& text) {
  if (text.empty() || text == "off") return LogLevel::Off;
  if (text == "info") return LogLevel::Info;
  if (text == "trace") return LogLevel::Trace;
  throw ConfigError("LOGOOPT_LOG must be off, info or trace");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

HmaxSchedule parse_hmax(const std::string& text) {
  if (text == "sqrt") return HmaxSchedule::SqrtMinusW;
  if (text == "wsqrt") return HmaxSchedule::WSqrtMinusW;
  throw ConfigError("--hmax must be sqrt or wsqrt");
}

double parse_L(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !(v >= 0.0)) throw ConfigError("--L must be >= 0 or inf");
  return v;
}

/// CSV sink: the --out file when given, else `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ConfigError("cannot open output file: " + path);
    stream_ = file_.get();
  }
  std::ostream& csv() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Log {
  LogLevel level;
  std::ostream& err;
  void info(const std::string& msg) const {
    if (level != LogLevel::Off) err << "[info] " << msg << '\n';
  }
  void trace(const std::string& msg) const {
    if (level == LogLevel::Trace) err << "[trace] " << msg << '\n';
  }
};

WidthMode width_for(const RunConfig& c) {
  if (c.w) return FixedWidth{*c.w};
  return AdaptiveWidth{parse_schedule(c.w_schedule)};
}

std::string join_point(const std::vector<double>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ';';
    s += format_double(x[i]);
  }
  return s;
}

}  // namespace

int cmd_bench(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Log log{c.log, err};
  if (c.L || c.workers) throw ConfigError("--L and --workers apply to plan only");
  const ObjectiveSpec& spec = find_objective(c.target);
  const std::string algo = c.algo.empty() ? "logo-adaptive" : c.algo;

  OptimizerConfig oc;
  oc.hmax = parse_hmax(c.hmax);
  if (algo == "soo") {
    if (c.w && *c.w != 1) throw ConfigError("soo runs with w = 1");
    oc.width = FixedWidth{1};
  } else if (algo == "logo") {
    oc.width = FixedWidth{c.w.value_or(3)};
  } else if (algo == "logo-adaptive") {
    if (c.w) throw ConfigError("--w conflicts with logo-adaptive; use --w-schedule");
    oc.width = AdaptiveWidth{parse_schedule(c.w_schedule)};
  } else {
    throw ConfigError("bench algorithm must be soo, logo or logo-adaptive");
  }
  oc.stop.max_evaluations = c.nmax.value_or(8000);
  oc.stop.target_error = c.target_error;
  oc.stop.f_star = spec.f_star;
  oc.validate();

  Sink sink(c.out, out);
  std::ostream& csv = sink.csv();
  csv << "n,N,best_value,error,wall_ms,w_current\n";
  log.info("bench " + spec.name + " " + algo);

  const auto start = Clock::now();
  double last_error = std::numeric_limits<double>::infinity();
  auto row = [&](const DivisionRecord& r) {
    const double e = error_metric(spec.f_star, r.best_value);
    if (e > last_error) throw std::logic_error("error column increased");
    last_error = e;
    csv << r.n << ',' << r.evals << ',' << format_double(r.best_value) << ',' << format_double(e)
        << ',' << format_double(ms_since(start)) << ',' << r.w << '\n';
    log.trace("n=" + std::to_string(r.n) + " N=" + std::to_string(r.evals) + " best=" +
              format_double(r.best_value));
  };
  const RunResult res = algo == "soo" ? run_soo(spec.evaluator, spec.domain, oc, row)
                                      : run(spec.evaluator, spec.domain, oc, row);
  const double wall = ms_since(start);
  csv.flush();

  std::ostream& summary = sink.to_file() ? out : err;
  summary << spec.name << ',' << algo << ','
          << (res.target_reached ? std::to_string(res.evaluations) : std::string("NA")) << ','
          << format_double(wall) << '\n';
  log.info("evaluations=" + std::to_string(res.evaluations) + " best=" +
           format_double(res.best_value));
  return res.target_reached ? kOk : kBudget;
}

int cmd_plan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Log log{c.log, err};
  if (!c.L) throw ConfigError("plan requires --L (a number or inf)");
  const std::string algo = c.algo.empty() ? (c.workers ? "plogo-op" : "logo-op") : c.algo;
  if (algo != "logo-op" && algo != "plogo-op") {
    throw ConfigError("plan algorithm must be logo-op or plogo-op");
  }
  if (algo == "logo-op" && c.workers) throw ConfigError("--workers needs plogo-op");
  const planner::PlanningProblem problem = planner::find_mdp(c.mdp);

  OptimizerConfig oc;
  oc.hmax = parse_hmax(c.hmax);
  oc.width = width_for(c);
  oc.stop.max_evaluations = c.nmax.value_or(1001);
  oc.validate();

  Sink sink(c.out, out);
  std::ostream& csv = sink.csv();
  csv << "n,m_steps,best_value,wall_ms\n";
  log.info("plan " + c.mdp + " " + algo + " L=" + format_double(*c.L));

  const auto start = Clock::now();
  auto row = [&](const planner::PlanRecord& r) {
    csv << r.division.n << ',' << r.m_steps << ',' << format_double(r.division.best_value) << ','
        << format_double(ms_since(start)) << '\n';
    log.trace("n=" + std::to_string(r.division.n) + " m=" + std::to_string(r.m_steps));
  };

  std::vector<double> best_x;
  double best_value = 0.0;
  if (algo == "logo-op") {
    planner::PlanConfig pc{oc, *c.L};
    const planner::PlanResult res = planner::logo_op_run(problem.mdp, problem.space, pc, row);
    best_x = res.best_x;
    best_value = res.best_value;
  } else {
    parallel::ParallelConfig pc;
    pc.optimizer = oc;
    pc.L = *c.L;
    pc.workers = c.workers.value_or(1);
    const parallel::ParallelResult res =
        parallel::plogo_op_run(problem.mdp, problem.space, pc, row);
    best_x = res.best_x;
    best_value = res.best_value;
    if (!c.task_log.empty()) {
      std::ofstream tl(c.task_log);
      if (!tl) throw ConfigError("cannot open task log: " + c.task_log);
      for (const parallel::TaskLogEntry& t : res.tasks) {
        const nlohmann::json j = {{"id", t.id},           {"cell", t.cell},
                                  {"x", t.x},             {"provisional", t.provisional},
                                  {"v_plus", t.v_plus},   {"value", t.value},
                                  {"steps", t.steps},     {"pruned", t.pruned}};
        tl << j.dump() << '\n';
      }
    }
  }
  csv.flush();
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "best_x=" << join_point(best_x) << '\n'
          << "best_value=" << format_double(best_value) << '\n';
  return kOk;
}

int cmd_bound(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.L || c.workers) throw ConfigError("--L and --workers apply to plan only");
  theory::BoundParams bp;
  bp.smoothness = {c.b, c.alpha, c.p, c.D};
  if (c.C && !(*c.C > 0.0)) throw ArgumentError("C must be positive");
  bp.C = c.C.value_or(0.0);
  bp.w = c.w.value_or(1);
  bp.w_prime = parse_hmax(c.hmax) == HmaxSchedule::SqrtMinusW ? 1 : bp.w;
  bp.validate();

  Sink sink(c.out, out);
  std::ostream& csv = sink.csv();
  csv << "n,bound\n";
  const std::size_t n_max = c.nmax.value_or(100);
  for (std::size_t n = 1; n <= n_max; ++n) {
    csv << n << ',' << format_double(theory::theorem2_bound(static_cast<double>(n), bp)) << '\n';
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"LOGO / LOGO-OP experiment driver", "logoopt"};
  app.set_config("--config", "", "flat key=value file; flags override it");
  app.require_subcommand(1);

  std::string L_text;
  app.add_option("--algo", c.algo, "soo | logo | logo-adaptive | logo-op | plogo-op");
  app.add_option("--w", c.w, "fixed local bias w");
  app.add_option("--w-schedule", c.w_schedule, "adaptive schedule, comma separated");
  app.add_option("--hmax", c.hmax, "depth cap: sqrt (sqrt(n)-w) or wsqrt (w sqrt(n)-w)")
      ->check(CLI::IsMember({"sqrt", "wsqrt"}));
  app.add_option("--target", c.target_error, "target error");
  app.add_option("--nmax", c.nmax, "evaluation budget (bound: rows)");
  app.add_option("--L", L_text, "pruning margin, number or inf");
  app.add_option("--workers", c.workers, "parallel evaluation workers");
  app.add_option("--mdp", c.mdp, "planning problem");
  app.add_option("--out", c.out, "CSV output path");
  app.add_option("--task-log", c.task_log, "JSON-lines task log (plogo-op)");
  app.add_option("--b", c.b, "smoothness scale b");
  app.add_option("--alpha", c.alpha, "smoothness exponent");
  app.add_option("--p", c.p, "norm order");
  app.add_option("--D", c.D, "dimension");
  app.add_option("--C", c.C, "near-optimality constant (default nu^-D)");

  std::string positional_algo;
  CLI::App* bench = app.add_subcommand("bench", "optimize a benchmark function");
  bench->add_option("objective", c.target, "benchmark name")->required();
  bench->add_option("algorithm", positional_algo, "same as --algo");
  bench->fallthrough();
  CLI::App* plan = app.add_subcommand("plan", "policy search on an MDP");
  plan->add_option("mdp", c.mdp, "planning problem");
  plan->fallthrough();
  CLI::App* bound = app.add_subcommand("bound", "tabulate the finite-time loss bound");
  bound->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    const char* env = std::getenv("LOGOOPT_LOG");
    c.log = parse_log_level(env ? env : "");
    if (!positional_algo.empty()) {
      if (!c.algo.empty() && c.algo != positional_algo) throw ConfigError("conflicting algorithms");
      c.algo = positional_algo;
    }
    if (!L_text.empty()) c.L = parse_L(L_text);
    if (bench->parsed()) return cmd_bench(c, out, err);
    if (plan->parsed()) return cmd_plan(c, out, err);
    return cmd_bound(c, out, err);
  } catch (const std::invalid_argument& e) {
    // ConfigError, ArgumentError and DomainError all land here.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EvaluationError& e) {
    err << "evaluation failed: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace logo::cli
