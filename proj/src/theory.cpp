#include "logo/theory.hpp"

#include <algorithm>
#include <cmath>

#include "logo/errors.hpp"

namespace logo::theory {

void SmoothnessParams::validate() const {
  if (!(b > 0.0)) throw ArgumentError("b must be positive");
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  if (!(p >= 1.0)) throw ArgumentError("p must be at least 1");
  if (D < 1) throw ArgumentError("D must be at least 1");
}

double SmoothnessParams::gamma() const { return std::pow(3.0, -alpha); }

double SmoothnessParams::c() const {
  return b * std::pow(3.0, alpha) * std::pow(static_cast<double>(D), alpha / p);
}

double SmoothnessParams::nu() const {
  return std::pow(3.0, -2.0 * alpha) * std::pow(static_cast<double>(D), -alpha / p);
}

void BoundParams::validate() const {
  smoothness.validate();
  if (w < 1) throw ArgumentError("w must be at least 1");
  if (w_prime != 1 && w_prime != w) throw ArgumentError("w' must be 1 or w");
  if (!(d >= 0.0)) throw ArgumentError("d must be non-negative");
  if (!(effective_C() > 0.0)) throw ArgumentError("C must be positive");
}

double BoundParams::effective_C() const {
  return C > 0.0 ? C : std::pow(smoothness.nu(), -static_cast<double>(smoothness.D));
}

double delta(double h, const SmoothnessParams& s) {
  if (h < 0.0) throw ArgumentError("depth must be non-negative");
  return s.c() * std::pow(s.gamma(), h / s.D);
}

double ball_ratio(int h, int w, const SmoothnessParams& s) {
  if (w < 1) throw ArgumentError("w must be at least 1");
  if (h < w - 1) throw ArgumentError("ball ratio needs h >= w - 1");
  return std::pow(delta(h - w + 1, s) / delta(h, s), s.D);
}

namespace {

double bound_with_factor(double n, const BoundParams& bp, double factor) {
  if (!(n >= 1.0)) throw ArgumentError("n must be at least 1");
  bp.validate();
  const SmoothnessParams& s = bp.smoothness;
  const double g = s.gamma();
  const double w = bp.w;
  const double wp = bp.w_prime;
  const double root = std::sqrt(n);
  const double first = root * (w / (wp * bp.effective_C())) / factor - 2.0;
  const double second = wp * root - w;
  const double expo = std::min(first, second) * (w / s.D) * std::log(1.0 / g);
  return s.c() * std::exp(-expo);
}

}  // namespace

double theorem2_bound(double n, const BoundParams& params) {
  const double g = params.smoothness.gamma();
  const double factor = (std::pow(g, -params.w) - 1.0) / (1.0 / g - 1.0);
  return bound_with_factor(n, params, factor);
}

double theorem3_bound(double n, const BoundParams& params) {
  return bound_with_factor(n, params, 1.0);
}

double w_effect_ratio_d0(int w, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0,1)");
  if (w < 1) throw ArgumentError("w must be at least 1");
  const double wd = w;
  return wd * wd * (1.0 / gamma - 1.0) / (std::pow(gamma, -wd) - 1.0);
}

double w_effect_log_ratio_dpos(int w, double gamma, double d, int D) {
  if (!(d > 0.0)) throw ArgumentError("d must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0,1)");
  if (w < 1 || D < 1) throw ArgumentError("w and D must be at least 1");
  const double wd = w;
  const double e = d / D;
  const double factor = (std::pow(gamma, -wd) - 1.0) / (1.0 / gamma - 1.0);
  const double num = std::log(wd * wd) + std::log(std::pow(gamma, wd * e) - std::pow(gamma, 2.0 * wd * e)) -
                     std::log(factor);
  const double den = std::log(std::pow(gamma, e) - std::pow(gamma, 2.0 * e));
  return -(num - den) / d;
}

double w_effect_ratio_dpos(int w, double gamma, double d, int D) {
  return std::exp(w_effect_log_ratio_dpos(w, gamma, d, D));
}

}  // namespace logo::theory
