#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "logo/cell.hpp"
#include "logo/ledger.hpp"

namespace logo {

enum class HmaxSchedule {
  SqrtMinusW,   ///< h_max(n) = sqrt(n) - w
  WSqrtMinusW,  ///< h_max(n) = w sqrt(n) - w
};

struct FixedWidth {
  int w = 1;
};

struct AdaptiveWidth {
  std::vector<int> schedule{3, 4, 5, 6, 8, 30};
};

using WidthMode = std::variant<FixedWidth, AdaptiveWidth>;

/// Throws ConfigError for a non-positive width or an empty/non-positive schedule.
void validate(const WidthMode& mode);

/// Depth limit at division count n. Real valued; the caller floors after dividing by w.
double hmax(double n, int w, HmaxSchedule schedule);

/// Next 1-based position in an adaptive width schedule of `schedule_len` entries.
std::size_t adapt_w(std::size_t j, bool progressed, std::size_t schedule_len);

/// Strict improvement over the best value divided so far in this iteration.
inline bool division_gate(double candidate_value, double val_max) {
  return candidate_value > val_max;
}

/// Highest-valued cell of superset k; ties go to the smaller depth, then the
/// smaller id. Null when the superset is empty.
const Cell* select_candidate(const DepthLedger& ledger, int k);

/// One Select/Divide step of the search.
struct Division {
  std::size_t iteration = 0;
  int k = 0;
  int w = 1;
  CellId parent = 0;
  int depth = 0;  ///< depth of the divided cell
  double parent_value = 0.0;
  Trisection children;
};

/// Resumable form of the hierarchical partitioning loop.
///
/// `advance()` runs the inner k-loop until it performs one division and hands
/// the two unevaluated children back to the caller, which must store their
/// values before the next call. When the k-loop is exhausted it returns
/// nullopt once; the caller then runs its end-of-iteration hooks (adaptive
/// width, value clamping) and the next call opens a new iteration.
///
/// The k-loop bound max(floor(min(h_max(n), h_upper) / w), h_plus) is
/// re-evaluated before every k, so an iteration keeps walking deeper until its
/// first division even when h_max is small.
class LogoSearch {
 public:
  LogoSearch(std::size_t dim, WidthMode width, HmaxSchedule schedule);

  /// Inserts the root cell with its center value.
  void seed(double root_value);

  std::optional<Division> advance();

  /// Applies the adaptive width rule at the end of an iteration. No-op for FixedWidth.
  void end_iteration(bool progressed);

  DepthLedger& ledger() noexcept { return ledger_; }
  const DepthLedger& ledger() const noexcept { return ledger_; }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t divisions() const noexcept { return divisions_; }
  std::size_t iteration() const noexcept { return iteration_; }
  std::size_t divisions_this_iteration() const noexcept { return iteration_divisions_; }
  bool in_iteration() const noexcept { return in_iteration_; }
  int width() const noexcept { return ledger_.width(); }
  int h_upper() const noexcept { return h_upper_; }
  /// 1-based index into the adaptive schedule (always 1 for FixedWidth).
  std::size_t width_index() const noexcept { return width_index_; }
  /// Current upper bound of the k-loop.
  int k_limit() const;

 private:
  std::size_t dim_;
  WidthMode mode_;
  HmaxSchedule schedule_;
  DepthLedger ledger_;

  std::size_t divisions_ = 0;
  std::size_t iteration_ = 0;
  std::size_t iteration_divisions_ = 0;
  std::size_t width_index_ = 1;
  int h_upper_ = 0;
  int h_plus_ = 0;
  int k_ = 0;
  double val_max_ = 0.0;
  bool in_iteration_ = false;
};

}  // namespace logo
