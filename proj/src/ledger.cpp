#include "logo/ledger.hpp"

#include <stdexcept>
#include <string>

#include "logo/errors.hpp"

namespace logo {

DepthLedger::DepthLedger(int width) { set_width(width); }

void DepthLedger::set_width(int width) {
  if (width < 1) throw ConfigError("superset width must be positive");
  width_ = width;
}

CellId DepthLedger::insert_root(std::size_t dim, double value) {
  if (!empty()) throw std::logic_error("ledger already has a root");
  Cell root = unit_cell(dim, next_id_++);
  root.value = value;
  if (sets_.empty()) sets_.emplace_back();
  depth_of_[root.id] = 0;
  live_by_center_[root.center_origin] = root.id;
  const CellId id = root.id;
  sets_[0].emplace(id, std::move(root));
  return id;
}

Trisection DepthLedger::divide(CellId id) {
  const auto where = depth_of_.find(id);
  if (where == depth_of_.end()) throw std::out_of_range("no live cell " + std::to_string(id));
  const int h = where->second;

  auto node = sets_[h].extract(id);
  Trisection t = trisect(node.mapped(), next_id_);
  next_id_ += 3;
  depth_of_.erase(where);

  if (static_cast<int>(sets_.size()) <= h + 1) sets_.resize(h + 2);
  for (const Cell* child : {&t.left, &t.center, &t.right}) {
    depth_of_[child->id] = h + 1;
    live_by_center_[child->center_origin] = child->id;
    sets_[h + 1].emplace(child->id, *child);
  }
  return t;
}

const Cell* DepthLedger::find(CellId id) const {
  const auto where = depth_of_.find(id);
  if (where == depth_of_.end()) return nullptr;
  return &sets_[where->second].at(id);
}

const Cell* DepthLedger::find_by_center(CellId origin) const {
  const auto where = live_by_center_.find(origin);
  if (where == live_by_center_.end()) return nullptr;
  return find(where->second);
}

Cell& DepthLedger::mutable_cell(CellId id) {
  const auto where = depth_of_.find(id);
  if (where == depth_of_.end()) throw std::out_of_range("no live cell " + std::to_string(id));
  return sets_[where->second].at(id);
}

void DepthLedger::set_value(CellId id, double value) { mutable_cell(id).value = value; }

std::size_t DepthLedger::clamp_below(double floor) {
  std::size_t changed = 0;
  for (auto& set : sets_) {
    for (auto& [id, cell] : set) {
      if (cell.value < floor) {
        cell.value = floor;
        ++changed;
      }
    }
  }
  return changed;
}

std::vector<const Cell*> DepthLedger::superset_members(int k) const {
  std::vector<const Cell*> out;
  if (k < 0) return out;
  const int first = k * width_;
  const int last = first + width_ - 1;
  for (int h = first; h <= last && h < depth_count(); ++h) {
    for (const auto& [id, cell] : sets_[h]) out.push_back(&cell);
  }
  return out;
}

int DepthLedger::superset_count() const {
  if (sets_.empty()) return 0;
  return (depth_count() - 1) / width_ + 1;
}

const std::map<CellId, Cell>& DepthLedger::depth_set(int h) const {
  static const std::map<CellId, Cell> kEmpty;
  if (h < 0 || h >= depth_count()) return kEmpty;
  return sets_[h];
}

}  // namespace logo
