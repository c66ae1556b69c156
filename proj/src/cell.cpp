#include "logo/cell.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace logo {

namespace {

// 3^k is exact in a double for k <= 33, so 1 / 3^k is correctly rounded.
constexpr int kExactPowers = 34;

constexpr std::array<double, kExactPowers> make_thirds() {
  std::array<double, kExactPowers> out{};
  double p = 1.0;
  for (int k = 0; k < kExactPowers; ++k) {
    out[k] = 1.0 / p;
    p *= 3.0;
  }
  return out;
}

constexpr auto kThirds = make_thirds();

}  // namespace

double third_power(int splits) {
  if (splits >= 0 && splits < kExactPowers) return kThirds[splits];
  return std::pow(3.0, -splits);
}

double Cell::longest_side() const { return side(longest_axis()); }

std::size_t Cell::longest_axis() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < splits.size(); ++i) {
    if (splits[i] < splits[best]) best = i;
  }
  return best;
}

double Cell::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < dim(); ++i) v *= side(i);
  return v;
}

Cell unit_cell(std::size_t dim, CellId id) {
  Cell c;
  c.id = id;
  c.depth = 0;
  c.lower.assign(dim, 0.0);
  c.splits.assign(dim, 0);
  c.center.assign(dim, 0.5);
  c.value = std::numeric_limits<double>::quiet_NaN();
  c.center_origin = id;
  return c;
}

Trisection trisect(const Cell& parent, CellId first_id) {
  const std::size_t axis = parent.longest_axis();
  const double third = third_power(parent.splits[axis] + 1);

  Cell base = parent;
  base.depth = parent.depth + 1;
  base.splits[axis] += 1;

  Trisection t{base, base, base};

  t.left.id = first_id;
  t.left.center[axis] = parent.center[axis] - third;
  t.left.value = std::numeric_limits<double>::quiet_NaN();
  t.left.center_origin = first_id;

  t.center.id = first_id + 1;
  t.center.lower[axis] = parent.lower[axis] + third;

  t.right.id = first_id + 2;
  t.right.lower[axis] = parent.lower[axis] + 2.0 * third;
  t.right.center[axis] = parent.center[axis] + third;
  t.right.value = std::numeric_limits<double>::quiet_NaN();
  t.right.center_origin = first_id + 2;

  return t;
}

}  // namespace logo
