#pragma once

namespace logo::theory {

/// Smoothness gauge l(x, y) = b ||x - y||_p^alpha on a D-dimensional cube.
struct SmoothnessParams {
  double b = 1.0;
  double alpha = 1.0;
  double p = 2.0;
  int D = 1;

  void validate() const;  // ArgumentError on out-of-range fields
  double gamma() const;   // 3^-alpha
  double c() const;       // b 3^alpha D^(alpha/p)
  double nu() const;      // 3^-2alpha D^(-alpha/p)
};

struct BoundParams {
  SmoothnessParams smoothness;
  double C = 0.0;  ///< <= 0 means "use nu^-D"
  int w = 1;
  int w_prime = 1;  ///< 1 for h_max = sqrt(n) - w, w for h_max = w sqrt(n) - w
  double d = 0.0;

  void validate() const;
  double effective_C() const;
};

/// Diameter bound of a depth-h cell: c gamma^(h/D).
double delta(double h, const SmoothnessParams& s);

/// (delta(h-w+1) / delta(h))^D, which collapses to gamma^-(w-1).
double ball_ratio(int h, int w, const SmoothnessParams& s);

/// Finite-time loss bound after n divisions (worst-case form).
double theorem2_bound(double n, const BoundParams& params);

/// Same bound with the (gamma^-w - 1)/(gamma^-1 - 1) factor set to 1.
double theorem3_bound(double n, const BoundParams& params);

/// w^2 (gamma^-1 - 1) / (gamma^-w - 1): the w-effect for d = 0.
double w_effect_ratio_d0(int w, double gamma);

/// The w-effect ratio for d > 0 (ArgumentError otherwise). Overflows to +inf
/// for extreme (w, gamma, small d); the log form below stays finite.
double w_effect_ratio_dpos(int w, double gamma, double d, int D);
double w_effect_log_ratio_dpos(int w, double gamma, double d, int D);

}  // namespace logo::theory
