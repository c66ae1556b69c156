#include <doctest.h>

#include <cmath>
#include <random>

#include "logo/cell.hpp"
#include "logo/ledger.hpp"
#include "partition_check.hpp"

using namespace logo;

TEST_SUITE("partition") {

TEST_CASE("third_power is exact against repeated division") {
  double v = 1.0;
  for (int k = 0; k < 20; ++k) {
    CHECK(third_power(k) == doctest::Approx(v).epsilon(1e-15));
    v /= 3.0;
  }
  CHECK(third_power(1) == 1.0 / 3.0);
}

TEST_CASE("trisection of the unit square") {
  Cell root = unit_cell(2, 0);
  root.value = 4.0;
  const Trisection t = trisect(root, 1);
  CHECK(t.left.id == 1);
  CHECK(t.center.id == 2);
  CHECK(t.right.id == 3);
  CHECK(t.left.depth == 1);
  // Axis 0 goes first on the tie.
  CHECK(t.left.splits == std::vector<int>{1, 0});
  CHECK(t.left.center[0] == doctest::Approx(1.0 / 6.0));
  CHECK(t.right.center[0] == doctest::Approx(5.0 / 6.0));
  CHECK(t.left.center[1] == 0.5);
  CHECK(t.center.center == root.center);
  CHECK(t.center.value == 4.0);
  CHECK(t.center.center_origin == root.center_origin);
  CHECK(std::isnan(t.left.value));
  CHECK(std::isnan(t.right.value));
  // Next division of a child splits axis 1.
  CHECK(t.left.longest_axis() == 1);
}

TEST_CASE("ledger groups children one depth down") {
  DepthLedger ledger(2);
  ledger.insert_root(1, 1.0);
  const Trisection t = ledger.divide(0);
  CHECK(ledger.size() == 3);
  CHECK(ledger.depth_set(0).empty());
  CHECK(ledger.depth_set(1).size() == 3);
  CHECK(ledger.find(0) == nullptr);
  CHECK(ledger.find_by_center(0)->id == t.center.id);
  CHECK(ledger.superset_members(0).size() == 3);  // psi_0 u psi_1 with w = 2
  ledger.set_width(1);
  CHECK(ledger.superset_members(0).empty());
  CHECK(ledger.superset_members(1).size() == 3);
}

TEST_CASE("clamp_below raises only values under the floor") {
  DepthLedger ledger;
  ledger.insert_root(1, 0.0);
  const Trisection t = ledger.divide(0);
  ledger.set_value(t.left.id, -5.0);
  ledger.set_value(t.right.id, 2.0);
  CHECK(ledger.clamp_below(-1.0) == 1);
  CHECK(ledger.find(t.left.id)->value == -1.0);
  CHECK(ledger.find(t.center.id)->value == 0.0);
  CHECK(ledger.find(t.right.id)->value == 2.0);
}

TEST_CASE("random division sequences keep an exact partition") {
  std::mt19937_64 rng(7);
  for (int D : {1, 2, 3, 6}) {
    for (int rep = 0; rep < 150; ++rep) {
      std::uniform_int_distribution<int> len(0, 30);
      const auto report = check::random_partition(D, len(rng), rng);
      INFO("D=" << D << " " << report.why);
      REQUIRE(report.ok);
    }
  }
}

TEST_CASE("diameter law at a few depths") {
  CHECK(check::expected_diameter(0, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(check::expected_diameter(1, 2) == doctest::Approx(std::sqrt(1.0 / 9.0 + 1.0)));
  CHECK(check::expected_diameter(2, 2) == doctest::Approx(std::sqrt(2.0) / 3.0));
}

}
