#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace logo {

using CellId = std::uint64_t;

/// Side length of an axis that has been trisected `splits` times: 3^-splits.
double third_power(int splits);

/// Hyperrectangle of the normalized domain [0, 1]^D.
///
/// Geometry is kept as a lower corner plus an integer split count per axis, so
/// side lengths are 3^-k exactly up to the rounding of one division. The center
/// is stored rather than recomputed: the middle child of a trisection must carry
/// the parent's center bit-for-bit, together with its value.
struct Cell {
  CellId id = 0;
  int depth = 0;
  std::vector<double> lower;
  std::vector<int> splits;
  std::vector<double> center;
  double value = 0.0;
  /// Id of the cell whose center evaluation produced `value`; shared along the
  /// chain of middle children.
  CellId center_origin = 0;

  std::size_t dim() const noexcept { return lower.size(); }
  double side(std::size_t axis) const { return third_power(splits[axis]); }
  double upper(std::size_t axis) const { return lower[axis] + side(axis); }
  double longest_side() const;
  /// Axis with maximal side length; lowest index on ties.
  std::size_t longest_axis() const;
  double volume() const;
};

struct Trisection {
  Cell left;
  Cell center;
  Cell right;
};

/// The whole unit cube at depth 0.
Cell unit_cell(std::size_t dim, CellId id);

/// Splits `parent` into thirds along its longest axis.
///
/// Children get ids first_id, first_id + 1, first_id + 2 (left, center, right)
/// and depth + 1. The center child inherits center, value and center_origin;
/// left and right values are NaN until evaluated.
Trisection trisect(const Cell& parent, CellId first_id);

}  // namespace logo
