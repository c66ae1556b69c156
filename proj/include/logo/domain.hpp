#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logo {

/// Axis-aligned search box in original units.
class Domain {
 public:
  Domain(std::vector<double> lower, std::vector<double> upper);

  /// Same interval [lo, hi] repeated `dim` times.
  static Domain cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }

  bool contains(std::span<const double> point) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Maps a point of `domain` into the unit cube. Throws DomainError when outside.
std::vector<double> normalize(std::span<const double> point, const Domain& domain);

/// Inverse of normalize. Throws DomainError for components outside [0, 1].
std::vector<double> denormalize(std::span<const double> unit_point, const Domain& domain);

}  // namespace logo
