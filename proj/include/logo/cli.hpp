#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace logo::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kBudget = 3 };

enum class LogLevel { Off, Info, Trace };

/// Parsed command line. Flags override `--config` file keys, which override
/// these defaults.
struct RunConfig {
  std::string subcommand;
  std::string target;  ///< objective name (bench)
  std::string mdp = "vent-world";
  std::string algo;    ///< empty: per-subcommand default
  std::optional<int> w;
  std::string w_schedule = "3,4,5,6,8,30";
  std::string hmax = "wsqrt";
  double target_error = 1e-4;
  std::optional<std::size_t> nmax;
  std::optional<double> L;
  std::optional<std::size_t> workers;
  std::string out;
  std::string task_log;
  // bound
  double b = 1.0;
  double alpha = 1.0;
  double p = 2.0;
  int D = 1;
  std::optional<double> C;
  LogLevel log = LogLevel::Off;
};

/// Full entry point: parses argv, runs the subcommand, returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Round-trip formatting: 17 significant digits.
std::string format_double(double value);

/// Comma-separated positive integers; throws ConfigError otherwise.
std::vector<int> parse_schedule(const std::string& text);

/// off / info / trace (empty means off); throws ConfigError otherwise.
LogLevel parse_log_level(const std::string& text);

}  // namespace logo::cli
