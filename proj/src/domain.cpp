#include "logo/domain.hpp"

#include <cmath>
#include <string>

#include "logo/errors.hpp"

namespace logo {

Domain::Domain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw DomainError("domain must have at least one dimension");
  if (lower_.size() != upper_.size()) throw DomainError("domain lower/upper length mismatch");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i])) {
      throw DomainError("domain requires lower < upper on axis " + std::to_string(i));
    }
  }
}

Domain Domain::cube(std::size_t dim, double lo, double hi) {
  return Domain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool Domain::contains(std::span<const double> point) const {
  if (point.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) return false;
  }
  return true;
}

std::vector<double> normalize(std::span<const double> point, const Domain& domain) {
  if (!domain.contains(point)) throw DomainError("point outside the search domain");
  std::vector<double> out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    out[i] = (point[i] - domain.lower()[i]) / (domain.upper()[i] - domain.lower()[i]);
  }
  return out;
}

std::vector<double> denormalize(std::span<const double> unit_point, const Domain& domain) {
  if (unit_point.size() != domain.dim()) throw DomainError("dimension mismatch");
  std::vector<double> out(unit_point.size());
  for (std::size_t i = 0; i < unit_point.size(); ++i) {
    const double u = unit_point[i];
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("unit point component outside [0, 1]");
    const double lo = domain.lower()[i];
    const double hi = domain.upper()[i];
    out[i] = u == 1.0 ? hi : lo + u * (hi - lo);
  }
  return out;
}

}  // namespace logo
