#include <cmath>

#include "doctest.h"
#include "pmsched/economics.hpp"
#include "support/reference.hpp"

using pmsched::CostModel;

namespace {
// Section 5 parameters used throughout the bundled examples.
CostModel reference_model() { return CostModel(500'000, 60'000, 300'000, 0.01, 0.08); }
}  // namespace

TEST_CASE("cost model validates its parameters") {
  CHECK_THROWS_AS(CostModel(0, 60e3, 300e3, 0.01, 0.08),
                  pmsched::ValidationError);
  CHECK_THROWS_AS(CostModel(500e3, -1, 300e3, 0.01, 0.08),
                  pmsched::ValidationError);
  CHECK_THROWS_AS(CostModel(500e3, 60e3, 0, 0.01, 0.08),
                  pmsched::ValidationError);
  CHECK_THROWS_AS(CostModel(500e3, 60e3, 300e3, -0.01, 0.08),
                  pmsched::ValidationError);
  // inflation must stay strictly below discount
  CHECK_THROWS_AS(CostModel(500e3, 60e3, 300e3, 0.08, 0.08),
                  pmsched::ValidationError);
  CHECK_THROWS_AS(CostModel(500e3, 60e3, 300e3, 0.10, 0.08),
                  pmsched::ValidationError);
  // zero inflation is allowed
  CHECK_NOTHROW(CostModel(500e3, 60e3, 300e3, 0.0, 0.08));
}

TEST_CASE("discount factor") {
  const CostModel model = reference_model();
  CHECK(model.factor(0) == 1.0);
  CHECK(model.factor(1) == doctest::Approx(101.0 / 108.0).epsilon(1e-14));

  // factor(4) agrees with multiplying factor(1) four times, and scales the
  // inspection cost to the known year-4 value.
  const double f1 = model.factor(1);
  CHECK(model.factor(4) ==
        doctest::Approx(f1 * f1 * f1 * f1).epsilon(1e-13));
  CHECK(std::fabs(500'000 * model.factor(4) - 382437.51) < 0.01);

  CHECK_THROWS_AS(model.factor(-1), pmsched::ValidationError);
}

TEST_CASE("cost curves hit the known values") {
  const CostModel model = reference_model();
  CHECK(std::fabs(model.inspection_cost(1) - 467592.59) < 0.01);
  CHECK(model.repair_cost(0) == 60'000.0);
  CHECK(std::fabs(model.outage_cost(24) - 60070.89) < 0.01);
}

TEST_CASE("all three cost curves decrease strictly whenever inflation < discount") {
  pmsched::testing::InstanceGen gen(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const CostModel model = gen.model();
    for (pmsched::Year t = 0; t < 40; ++t) {
      CHECK(model.inspection_cost(t + 1) < model.inspection_cost(t));
      CHECK(model.repair_cost(t + 1) < model.repair_cost(t));
      CHECK(model.outage_cost(t + 1) < model.outage_cost(t));
    }
  }
}

TEST_CASE("factor is multiplicative to 1e-12 relative") {
  pmsched::testing::InstanceGen gen(777);
  for (int trial = 0; trial < 200; ++trial) {
    const CostModel model = gen.model();
    const int t1 = gen.uniform(0, 60);
    const int t2 = gen.uniform(0, 60);
    const double joint = model.factor(t1 + t2);
    const double split = model.factor(t1) * model.factor(t2);
    CHECK(std::fabs(joint - split) <= 1e-12 * joint);
  }
}
