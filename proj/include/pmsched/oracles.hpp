#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/schedule.hpp"

namespace pmsched {

/// Default cap on the number of plan evaluations the comprehensive scan may
/// perform. Overridable per call (the CLI also honors PMSCHED_WORK_BUDGET).
inline constexpr std::uint64_t kDefaultWorkBudget = std::uint64_t{1} << 28;

/// A best plan for one inspection time plus the number of full-plan cost
/// evaluations spent finding it.
struct PlanSearch {
  PMSolution best;
  std::uint64_t evaluations = 0;
};

/// Evaluates all 2^window chained plans for an inspection at year t and
/// returns the cheapest (ties go to the plan keeping more groups at their
/// own deadlines). An empty window counts as one evaluation of the empty
/// plan.
PlanSearch best_plan_exhaustive(const CostModel& model,
                                const PrimarySchedule& schedule, Year t);

/// Evaluates every early-repair assignment (group k may go to any epoch
/// 0..k), a space of (window+1)!/1! products, and returns the cheapest.
/// Test-grade reference only; refuses windows larger than 10.
PlanSearch best_plan_unrestricted(const CostModel& model,
                                  const PrimarySchedule& schedule, Year t);

/// Result of scanning a set of inspection times: the best plan per time (in
/// ascending time order), the global optimum, and the evaluation count.
struct SweepResult {
  std::vector<PMSolution> per_candidate;
  PMSolution best;
  std::uint64_t evaluations = 0;
};

/// Exhaustive plan search at each candidate inspection time only. A
/// candidate with an empty window is resolved directly (no plan evaluation
/// is counted for it). Global ties prefer the later inspection.
SweepResult simplified_solve(const CostModel& model,
                             const PrimarySchedule& schedule);

/// Exhaustive plan search at every inspection time 1..horizon; the
/// benchmark reference. per_candidate still reports only candidate times.
/// Throws WorkBudgetError when the predicted number of evaluations
/// (sum of 2^window over all t) exceeds `budget`.
SweepResult comprehensive_solve(const CostModel& model,
                                const PrimarySchedule& schedule,
                                std::uint64_t budget = kDefaultWorkBudget);

}  // namespace pmsched
