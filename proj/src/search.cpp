#include "logo/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "logo/errors.hpp"

namespace logo {

void validate(const WidthMode& mode) {
  if (const auto* fixed = std::get_if<FixedWidth>(&mode)) {
    if (fixed->w < 1) throw ConfigError("width w must be a positive integer");
    return;
  }
  const auto& adaptive = std::get<AdaptiveWidth>(mode);
  if (adaptive.schedule.empty()) throw ConfigError("adaptive width schedule is empty");
  for (int w : adaptive.schedule) {
    if (w < 1) throw ConfigError("adaptive width schedule entries must be positive");
  }
}

double hmax(double n, int w, HmaxSchedule schedule) {
  const double root = std::sqrt(n);
  switch (schedule) {
    case HmaxSchedule::SqrtMinusW:
      return root - w;
    case HmaxSchedule::WSqrtMinusW:
      return w * root - w;
  }
  throw std::logic_error("unknown h_max schedule");
}

std::size_t adapt_w(std::size_t j, bool progressed, std::size_t schedule_len) {
  if (progressed) return std::min(j + 1, schedule_len);
  return std::max<std::size_t>(j, 2) - 1;
}

const Cell* select_candidate(const DepthLedger& ledger, int k) {
  if (k < 0) return nullptr;
  const Cell* best = nullptr;
  const int first = k * ledger.width();
  const int last = std::min(first + ledger.width(), ledger.depth_count());
  // Depth ascending, id ascending: the first maximum seen wins every tie.
  for (int h = first; h < last; ++h) {
    for (const auto& [id, cell] : ledger.depth_set(h)) {
      if (best == nullptr || cell.value > best->value) best = &cell;
    }
  }
  return best;
}

namespace {

int initial_width(const WidthMode& mode) {
  if (const auto* fixed = std::get_if<FixedWidth>(&mode)) return fixed->w;
  return std::get<AdaptiveWidth>(mode).schedule.front();
}

}  // namespace

LogoSearch::LogoSearch(std::size_t dim, WidthMode width, HmaxSchedule schedule)
    : dim_(dim), mode_(std::move(width)), schedule_(schedule), ledger_(1) {
  if (dim_ == 0) throw ConfigError("dimension must be positive");
  validate(mode_);
  ledger_.set_width(initial_width(mode_));
}

void LogoSearch::seed(double root_value) { ledger_.insert_root(dim_, root_value); }

int LogoSearch::k_limit() const {
  const int w = ledger_.width();
  // Division counter as initialized in the reference loop: 1 before any division.
  const double n = static_cast<double>(divisions_ + 1);
  const double capped = std::min(hmax(n, w, schedule_), static_cast<double>(h_upper_));
  const int by_depth = static_cast<int>(std::floor(capped / w));
  return std::max(by_depth, h_plus_);
}

std::optional<Division> LogoSearch::advance() {
  if (ledger_.empty()) throw std::logic_error("search must be seeded before advancing");
  if (!in_iteration_) {
    ++iteration_;
    iteration_divisions_ = 0;
    val_max_ = -std::numeric_limits<double>::infinity();
    h_plus_ = h_upper_;
    k_ = 0;
    in_iteration_ = true;
  }
  while (k_ <= k_limit()) {
    const int k = k_++;
    const Cell* candidate = select_candidate(ledger_, k);
    if (candidate == nullptr || !division_gate(candidate->value, val_max_)) continue;

    Division d;
    d.iteration = iteration_;
    d.k = k;
    d.w = ledger_.width();
    d.parent = candidate->id;
    d.depth = candidate->depth;
    d.parent_value = candidate->value;

    val_max_ = candidate->value;
    h_plus_ = 0;
    h_upper_ = std::max(h_upper_, candidate->depth + 1);
    ++divisions_;
    ++iteration_divisions_;
    d.children = ledger_.divide(d.parent);
    return d;
  }
  in_iteration_ = false;
  return std::nullopt;
}

void LogoSearch::end_iteration(bool progressed) {
  const auto* adaptive = std::get_if<AdaptiveWidth>(&mode_);
  if (adaptive == nullptr) return;
  width_index_ = adapt_w(width_index_, progressed, adaptive->schedule.size());
  ledger_.set_width(adaptive->schedule[width_index_ - 1]);
}

}  // namespace logo
