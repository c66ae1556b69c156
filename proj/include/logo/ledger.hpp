#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "logo/cell.hpp"

namespace logo {

/// The depth sets psi_h of live cells, plus the superset view
/// Psi_k = psi_{kw} u ... u psi_{kw+w-1} for the current width w.
///
/// Depth sets are the ground truth; supersets are derived on demand, so
/// changing w never moves a cell.
class DepthLedger {
 public:
  explicit DepthLedger(int width = 1);

  int width() const noexcept { return width_; }
  void set_width(int width);

  /// Inserts the unit cube at depth 0. The ledger must be empty.
  CellId insert_root(std::size_t dim, double value);

  /// Trisects a live cell, removes it from its depth set and groups the three
  /// children into the next one. Returns copies of the children.
  Trisection divide(CellId id);

  const Cell* find(CellId id) const;
  /// Live cell currently carrying the center evaluated for `origin`, if any.
  const Cell* find_by_center(CellId origin) const;
  void set_value(CellId id, double value);

  /// Raises every stored value below `floor` to `floor`. Returns how many changed.
  std::size_t clamp_below(double floor);

  std::vector<const Cell*> superset_members(int k) const;
  /// Number of the highest superset index with a depth set allocated.
  int superset_count() const;

  const std::map<CellId, Cell>& depth_set(int h) const;
  int depth_count() const noexcept { return static_cast<int>(sets_.size()); }
  std::size_t size() const noexcept { return depth_of_.size(); }
  bool empty() const noexcept { return depth_of_.empty(); }
  CellId next_id() const noexcept { return next_id_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& set : sets_) {
      for (const auto& [id, cell] : set) fn(cell);
    }
  }

 private:
  Cell& mutable_cell(CellId id);

  std::vector<std::map<CellId, Cell>> sets_;
  std::unordered_map<CellId, int> depth_of_;
  std::unordered_map<CellId, CellId> live_by_center_;
  int width_;
  CellId next_id_ = 0;
};

}  // namespace logo
