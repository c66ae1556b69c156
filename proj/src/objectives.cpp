#include "logo/objectives.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "logo/errors.hpp"

namespace logo {

namespace {

// Shekel: x in [0,10]^4, f = -sum_{i<m} 1 / (|x - a_i|^2 + c_i).
constexpr std::array<std::array<double, 4>, 10> kShekelA{{
    {4, 4, 4, 4},
    {1, 1, 1, 1},
    {8, 8, 8, 8},
    {6, 6, 6, 6},
    {3, 7, 3, 7},
    {2, 9, 2, 9},
    {5, 5, 3, 3},
    {8, 1, 8, 1},
    {6, 2, 6, 2},
    {7, 3.6, 7, 3.6},
}};
constexpr std::array<double, 10> kShekelC{0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

constexpr std::array<double, 4> kHartmanAlpha{1.0, 1.2, 3.0, 3.2};

constexpr std::array<std::array<double, 3>, 4> kHartman3A{{
    {3.0, 10, 30},
    {0.1, 10, 35},
    {3.0, 10, 30},
    {0.1, 10, 35},
}};
constexpr std::array<std::array<double, 3>, 4> kHartman3P{{
    {0.3689, 0.1170, 0.2673},
    {0.4699, 0.4387, 0.7470},
    {0.1091, 0.8732, 0.5547},
    {0.0381, 0.5743, 0.8828},
}};

constexpr std::array<std::array<double, 6>, 4> kHartman6A{{
    {10, 3, 17, 3.5, 1.7, 8},
    {0.05, 10, 17, 0.1, 8, 14},
    {3, 3.5, 1.7, 10, 17, 8},
    {17, 8, 0.05, 10, 0.1, 14},
}};
constexpr std::array<std::array<double, 6>, 4> kHartman6P{{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381},
}};

void require_dim(std::span<const double> x, std::size_t dim, std::string_view name) {
  if (x.size() != dim) {
    throw DomainError(std::string(name) + " expects dimension " + std::to_string(dim));
  }
}

double peaks(std::span<const double> v) {
  const double x = v[0];
  const double y = v[1];
  return 3.0 * (1.0 - x) * (1.0 - x) * std::exp(-x * x - (y + 1.0) * (y + 1.0)) -
         10.0 * (x / 5.0 - x * x * x - std::pow(y, 5)) * std::exp(-x * x - y * y) -
         std::exp(-(x + 1.0) * (x + 1.0) - y * y) / 3.0;
}

double branin(std::span<const double> v) {
  using std::numbers::pi;
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double q = v[1] - b * v[0] * v[0] + c * v[0] - 6.0;
  return q * q + 10.0 * (1.0 - t) * std::cos(v[0]) + 10.0;
}

double rosenbrock(std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double a = v[i + 1] - v[i] * v[i];
    const double b = v[i] - 1.0;
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

template <std::size_t D>
double hartman(std::span<const double> v, const std::array<std::array<double, D>, 4>& a,
               const std::array<std::array<double, D>, 4>& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      const double d = v[j] - p[i][j];
      inner += a[i][j] * d * d;
    }
    sum += kHartmanAlpha[i] * std::exp(-inner);
  }
  return -sum;
}

double shekel(std::span<const double> v, std::size_t m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = v[j] - kShekelA[i][j];
      sq += d * d;
    }
    sum += 1.0 / (sq + kShekelC[i]);
  }
  return -sum;
}

ObjectiveSpec standard(std::string name, Domain domain, double f_star, std::string note) {
  Objective eval = [name](std::span<const double> x) { return eval_standard(name, x); };
  return ObjectiveSpec{std::move(name), std::move(domain), std::move(eval), f_star, std::move(note)};
}

// Optimum values: see tests/oracles/fstar_oracle.py (grid or multistart plus
// local refinement), cross-checked by test_objectives.
std::vector<ObjectiveSpec> build_registry() {
  std::vector<ObjectiveSpec> r;
  constexpr double kSin1Star = 0.97559914381157500;
  r.push_back({"sin1", Domain::cube(1, 0.0, 1.0),
               [](std::span<const double> x) {
                 require_dim(x, 1, "sin1");
                 return eval_sin1(x[0]);
               },
               kSin1Star, "1e7-point grid, then a 2e6-point grid around the best cell"});
  r.push_back({"sin2", Domain::cube(2, 0.0, 1.0),
               [](std::span<const double> x) {
                 require_dim(x, 2, "sin2");
                 return eval_sin2(x[0], x[1]);
               },
               kSin1Star * kSin1Star, "square of the sin1 optimum (separable product)"});
  r.push_back(standard("peaks", Domain::cube(2, -3.0, 3.0), 6.5511333328358408,
                       "negated minimum, multistart refinement"));
  r.push_back(standard("branin", Domain({-5.0, 0.0}, {10.0, 15.0}), -0.39788735772973816,
                       "negated minimum at (pi, 2.275)"));
  r.push_back(standard("rosenbrock2", Domain::cube(2, -5.0, 10.0), 0.0, "exact, all-ones point"));
  r.push_back(standard("rosenbrock10", Domain::cube(10, -5.0, 10.0), 0.0, "exact, all-ones point"));
  r.push_back(standard("hartman3", Domain::cube(3, 0.0, 1.0), 3.8627797873326628,
                       "negated minimum, multistart refinement"));
  r.push_back(standard("hartman6", Domain::cube(6, 0.0, 1.0), 3.3223680114155152,
                       "negated minimum, multistart refinement"));
  r.push_back(standard("shekel5", Domain::cube(4, 0.0, 10.0), 10.153199679058229,
                       "negated minimum, multistart refinement"));
  r.push_back(standard("shekel7", Domain::cube(4, 0.0, 10.0), 10.402940566818664,
                       "negated minimum, multistart refinement"));
  r.push_back(standard("shekel10", Domain::cube(4, 0.0, 10.0), 10.536409816692045,
                       "negated minimum, multistart refinement"));
  return r;
}

}  // namespace

double eval_sin1(double x) { return (std::sin(13.0 * x) * std::sin(27.0 * x) + 1.0) / 2.0; }

double eval_sin2(double x1, double x2) { return eval_sin1(x1) * eval_sin1(x2); }

double eval_standard(std::string_view name, std::span<const double> point) {
  if (name == "peaks") {
    require_dim(point, 2, name);
    return -peaks(point);
  }
  if (name == "branin") {
    require_dim(point, 2, name);
    return -branin(point);
  }
  if (name == "rosenbrock2") {
    require_dim(point, 2, name);
    return -rosenbrock(point);
  }
  if (name == "rosenbrock10") {
    require_dim(point, 10, name);
    return -rosenbrock(point);
  }
  if (name == "hartman3") {
    require_dim(point, 3, name);
    return -hartman<3>(point, kHartman3A, kHartman3P);
  }
  if (name == "hartman6") {
    require_dim(point, 6, name);
    return -hartman<6>(point, kHartman6A, kHartman6P);
  }
  for (std::size_t m : {5u, 7u, 10u}) {
    if (name == "shekel" + std::to_string(m)) {
      require_dim(point, 4, name);
      return -shekel(point, m);
    }
  }
  throw ConfigError("unknown benchmark '" + std::string(name) + "'");
}

const std::vector<ObjectiveSpec>& objective_registry() {
  static const std::vector<ObjectiveSpec> registry = build_registry();
  return registry;
}

const ObjectiveSpec& find_objective(std::string_view name) {
  for (const auto& spec : objective_registry()) {
    if (spec.name == name) return spec;
  }
  throw ConfigError("unknown objective '" + std::string(name) + "'");
}

double error_metric(double f_star, double f_plus) {
  if (f_star != 0.0) return std::abs((f_star - f_plus) / f_star);
  return std::abs(f_star - f_plus);
}

}  // namespace logo
