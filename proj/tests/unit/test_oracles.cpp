#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "pmsched/oracles.hpp"
#include "support/reference.hpp"

using namespace pmsched;
using pmsched::testing::InstanceGen;

namespace {

CostModel reference_model() { return CostModel(500e3, 60e3, 300e3, 0.01, 0.08); }

PrimarySchedule example01() {
  return PrimarySchedule(30, {{1, 1}, {2, 8}, {1, 16}});
}
PrimarySchedule example04() {
  return PrimarySchedule(30, {{1, 5}, {1, 6}, {3, 8}, {3, 15}, {2, 19}, {1, 25}});
}
PrimarySchedule example05() {
  return PrimarySchedule(30, {{1, 2}, {1, 5}, {1, 8}, {1, 15}, {6, 24}, {5, 26}, {4, 28}});
}
PrimarySchedule example11() {
  return PrimarySchedule(30, {{1, 2}, {1, 5}, {3, 6}, {2, 7}, {2, 10}, {1, 12}, {1, 13},
                              {3, 17}, {4, 18}, {1, 20}, {4, 21}, {5, 24}, {2, 26}});
}

std::uint64_t expected_comprehensive_evals(const PrimarySchedule& sched) {
  std::uint64_t total = 0;
  for (Year t = 1; t <= sched.horizon(); ++t) {
    total += std::uint64_t{1} << sched.window_size(t);
  }
  return total;
}

}  // namespace

TEST_CASE("exhaustive search over chained plans") {
  const CostModel model = reference_model();
  const PrimarySchedule sched = example05();

  SUBCASE("known optimum at year 23: everything at the primary inspection") {
    const PlanSearch r = best_plan_exhaustive(model, sched, 23);
    CHECK(std::fabs(r.best.cost - 347057.04) < 0.01);
    CHECK(r.best.plan.epoch_index == std::vector<int>{0, 0, 0, 0});
    CHECK(r.evaluations == 16);
  }

  SUBCASE("empty window returns the empty plan after one evaluation") {
    const PlanSearch r = best_plan_exhaustive(model, sched, 1);
    CHECK(r.best.plan.window_size() == 0);
    CHECK(r.best.cost == total_cost(model, sched, 1, RepairPlan{}));
    CHECK(r.evaluations == 1);
  }

  SUBCASE("matches a direct minimum over all flag vectors") {
    InstanceGen gen(555);
    const CostModel m2 = gen.model();
    const PrimarySchedule s2(20, {{2, 3}, {1, 7}, {3, 11}, {2, 16}});
    const Year t = 20;
    double expect = 0;
    bool first = true;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<bool> flags(4);
      for (int k = 0; k < 4; ++k) flags[k] = (mask >> k) & 1u;
      const double c = total_cost(m2, s2, t, chained_plan(s2, t, flags));
      if (first || c < expect) expect = c;
      first = false;
    }
    CHECK(best_plan_exhaustive(m2, s2, t).best.cost == expect);
    CHECK(best_plan_unrestricted(m2, s2, t).best.cost == expect);
  }
}

TEST_CASE("unrestricted search") {
  const CostModel model = reference_model();
  const PrimarySchedule sched = example05();

  SUBCASE("single-group window: the cheaper of the two placements") {
    const PlanSearch r = best_plan_unrestricted(model, sched, 4);
    const double at_zero = total_cost(model, sched, 4, RepairPlan{{0}});
    const double at_own = total_cost(model, sched, 4, RepairPlan{{1}});
    CHECK(r.best.cost == std::min(at_zero, at_own));
    CHECK(r.evaluations == 2);
  }

  SUBCASE("full horizon agrees with the known value") {
    CHECK(std::fabs(best_plan_unrestricted(model, sched, 30).best.cost -
                    547256.39) < 0.01);
  }

  SUBCASE("windows beyond 10 groups are refused") {
    std::vector<DefectGroup> groups;
    for (int i = 1; i <= 11; ++i) groups.push_back({1, i});
    const PrimarySchedule wide(20, std::move(groups));
    CHECK_THROWS_AS(best_plan_unrestricted(model, wide, 20), WorkBudgetError);
  }

  SUBCASE("restricting to chained plans loses nothing, at any candidate") {
    InstanceGen gen(8080);
    for (int trial = 0; trial < 100; ++trial) {
      const CostModel m2 = gen.model();
      const PrimarySchedule s2 = gen.schedule(6, 25);
      for (const Year t : candidate_times(s2)) {
        CHECK(best_plan_unrestricted(m2, s2, t).best.cost ==
              best_plan_exhaustive(m2, s2, t).best.cost);
      }
    }
  }
}

TEST_CASE("simplified sweep") {
  const CostModel model = reference_model();

  SUBCASE("known optima") {
    CHECK(std::fabs(simplified_solve(model, example01()).best.cost -
                    306972.81) < 0.01);
    CHECK(std::fabs(simplified_solve(model, example11()).best.cost -
                    442437.51) < 0.01);
  }

  SUBCASE("one solution per candidate, in ascending time order") {
    const SweepResult r = simplified_solve(model, example05());
    const auto cands = candidate_times(example05());
    REQUIRE(r.per_candidate.size() == cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      CHECK(r.per_candidate[i].inspection == cands[i]);
    }
  }

  SUBCASE("evaluation counter: sum of 2^k for k = 0..N, minus one") {
    CHECK(simplified_solve(model, example05()).evaluations == (1u << 8) - 2);
    CHECK(simplified_solve(model, example01()).evaluations == (1u << 4) - 2);
  }
}

TEST_CASE("comprehensive sweep") {
  const CostModel model = reference_model();

  SUBCASE("known optima") {
    CHECK(std::fabs(comprehensive_solve(model, example05()).best.cost -
                    347057.04) < 0.01);
    CHECK(std::fabs(comprehensive_solve(model, example04()).best.cost -
                    382437.51) < 0.01);
  }

  SUBCASE("evaluation counter: sum over t of 2^window(t)") {
    const PrimarySchedule sched = example05();
    CHECK(comprehensive_solve(model, sched).evaluations ==
          expected_comprehensive_evals(sched));
  }

  SUBCASE("work budget is enforced before any work happens") {
    CHECK_THROWS_AS(comprehensive_solve(model, example05(), 100),
                    WorkBudgetError);
  }

  SUBCASE("agrees with the simplified sweep and lands on a candidate") {
    InstanceGen gen(616);
    for (int trial = 0; trial < 60; ++trial) {
      const CostModel m2 = gen.model();
      const PrimarySchedule s2 = gen.schedule(7, 30);
      const SweepResult comp = comprehensive_solve(m2, s2);
      const SweepResult simp = simplified_solve(m2, s2);
      CHECK(comp.best.cost == simp.best.cost);
      const auto cands = candidate_times(s2);
      CHECK(std::binary_search(cands.begin(), cands.end(),
                               comp.best.inspection));
    }
  }
}
