#include <doctest.h>

#include "logo/objectives.hpp"
#include "logo/optimizer.hpp"
#include "logo/soo.hpp"

using namespace logo;

TEST_SUITE("soo") {

TEST_CASE("dedicated SOO and LOGO with w = 1 divide the same cells") {
  for (const char* name : {"sin1", "sin2", "branin", "hartman3"}) {
    const ObjectiveSpec& spec = find_objective(name);
    OptimizerConfig cfg;
    cfg.width = FixedWidth{1};
    cfg.hmax = HmaxSchedule::SqrtMinusW;
    cfg.stop.max_divisions = 300;
    const RunResult logo = run(spec.evaluator, spec.domain, cfg);
    const RunResult soo = run_soo(spec.evaluator, spec.domain, cfg);
    INFO(name);
    REQUIRE(logo.trace.size() == soo.trace.size());
    CHECK(logo.trace == soo.trace);
    CHECK(logo.best_point == soo.best_point);
  }
}

TEST_CASE("SOO ignores the width setting") {
  const ObjectiveSpec& spec = find_objective("sin1");
  OptimizerConfig a;
  a.stop.max_divisions = 50;
  OptimizerConfig b = a;
  b.width = FixedWidth{7};
  CHECK(run_soo(spec.evaluator, spec.domain, a).trace == run_soo(spec.evaluator, spec.domain, b).trace);
}

TEST_CASE("SOO budget accounting") {
  const ObjectiveSpec& spec = find_objective("peaks");
  OptimizerConfig cfg;
  cfg.stop.max_evaluations = 101;
  const RunResult r = run_soo(spec.evaluator, spec.domain, cfg);
  CHECK(r.evaluations == 101);
  CHECK(r.evaluations == 2 * r.divisions + 1);
}

}
