#include <doctest.h>

#include <vector>

#include "logo/domain.hpp"
#include "logo/errors.hpp"

using namespace logo;

TEST_SUITE("domain") {

TEST_CASE("construction rejects empty or inverted boxes") {
  CHECK_THROWS_AS(Domain({}, {}), DomainError);
  CHECK_THROWS_AS(Domain({0.0}, {0.0}), DomainError);
  CHECK_THROWS_AS(Domain({1.0}, {0.0}), DomainError);
  CHECK_THROWS_AS(Domain({0.0, 0.0}, {1.0}), DomainError);
  CHECK_NOTHROW(Domain({-5.0, 0.0}, {10.0, 15.0}));
}

TEST_CASE("normalize / denormalize round trip on branin's box") {
  const Domain d({-5.0, 0.0}, {10.0, 15.0});
  const std::vector<double> x{2.5, 7.5};
  const auto u = normalize(x, d);
  CHECK(u[0] == doctest::Approx(0.5));
  CHECK(u[1] == doctest::Approx(0.5));
  const auto back = denormalize(u, d);
  CHECK(back[0] == doctest::Approx(2.5));
  CHECK(back[1] == doctest::Approx(7.5));
}

TEST_CASE("unit corners map exactly onto the box corners") {
  const Domain d = Domain::cube(3, -3.0, 3.0);
  const std::vector<double> lo{0.0, 0.0, 0.0}, hi{1.0, 1.0, 1.0};
  CHECK(denormalize(lo, d) == d.lower());
  CHECK(denormalize(hi, d) == d.upper());
}

TEST_CASE("points outside are rejected") {
  const Domain d = Domain::cube(2, 0.0, 1.0);
  const std::vector<double> out{0.5, 1.5};
  CHECK_FALSE(d.contains(out));
  CHECK_THROWS_AS(normalize(out, d), DomainError);
  CHECK_THROWS_AS(denormalize(out, d), DomainError);
  const std::vector<double> wrong_dim{0.5};
  CHECK_THROWS_AS(normalize(wrong_dim, d), DomainError);
}

}
