#include "pmsched/oracles.hpp"

#include <algorithm>
#include <string>

namespace pmsched {

namespace {

bool improves(double cost, const RepairPlan& plan, const PMSolution& best) {
  return cost < best.cost || (cost == best.cost && prefer_plan(plan, best.plan));
}

// Later inspection wins on exact cost ties.
bool improves_global(const PMSolution& sol, const PMSolution& best) {
  return sol.cost < best.cost ||
         (sol.cost == best.cost && sol.inspection > best.inspection);
}

}  // namespace

PlanSearch best_plan_exhaustive(const CostModel& model,
                                const PrimarySchedule& schedule, Year t) {
  const int m = schedule.window_size(t);
  if (m >= 63) {
    throw WorkBudgetError("exhaustive search: window of " + std::to_string(m) +
                          " groups is beyond any sane budget");
  }
  PlanSearch out;
  out.best.inspection = t;
  out.best.cost = 0.0;
  std::vector<bool> flags(static_cast<std::size_t>(m));
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int k = 0; k < m; ++k) flags[k] = (mask >> k) & 1u;
    RepairPlan plan = chained_plan(schedule, t, flags);
    const double cost = total_cost(model, schedule, t, plan);
    ++out.evaluations;
    if (first || improves(cost, plan, out.best)) {
      out.best.plan = std::move(plan);
      out.best.cost = cost;
      first = false;
    }
  }
  return out;
}

PlanSearch best_plan_unrestricted(const CostModel& model,
                                  const PrimarySchedule& schedule, Year t) {
  const int m = schedule.window_size(t);
  if (m > 10) {
    throw WorkBudgetError("unrestricted search: window of " +
                          std::to_string(m) +
                          " groups exceeds the factorial-space limit of 10");
  }
  PlanSearch out;
  out.best.inspection = t;
  RepairPlan plan;
  plan.epoch_index.assign(static_cast<std::size_t>(m), 0);
  bool first = true;
  while (true) {
    const double cost = total_cost(model, schedule, t, plan);
    ++out.evaluations;
    if (first || improves(cost, plan, out.best)) {
      out.best.plan = plan;
      out.best.cost = cost;
      first = false;
    }
    // next assignment: mixed-radix increment, digit k runs over 0..k+1
    int k = 0;
    while (k < m) {
      if (plan.epoch_index[k] < k + 1) {
        ++plan.epoch_index[k];
        break;
      }
      plan.epoch_index[k] = 0;
      ++k;
    }
    if (k == m) break;
  }
  return out;
}

SweepResult simplified_solve(const CostModel& model,
                             const PrimarySchedule& schedule) {
  SweepResult out;
  bool first = true;
  for (const Year t : candidate_times(schedule)) {
    PMSolution sol;
    if (schedule.window_size(t) == 0) {
      // Nothing to plan: the cost is the inspection alone, and no plan
      // evaluation is charged to the counter.
      sol.inspection = t;
      sol.cost = total_cost(model, schedule, t, RepairPlan{});
    } else {
      PlanSearch search = best_plan_exhaustive(model, schedule, t);
      out.evaluations += search.evaluations;
      sol = std::move(search.best);
    }
    if (first || improves_global(sol, out.best)) {
      out.best = sol;
      first = false;
    }
    out.per_candidate.push_back(std::move(sol));
  }
  return out;
}

SweepResult comprehensive_solve(const CostModel& model,
                                const PrimarySchedule& schedule,
                                std::uint64_t budget) {
  // Predict the total work before doing any of it.
  std::uint64_t predicted = 0;
  for (Year t = 1; t <= schedule.horizon(); ++t) {
    const int m = schedule.window_size(t);
    if (m >= 63 || (std::uint64_t{1} << m) > budget - predicted) {
      throw WorkBudgetError(
          "comprehensive scan needs more than " + std::to_string(budget) +
          " plan evaluations; raise the work budget or use the tree or "
          "simplified algorithm");
    }
    predicted += std::uint64_t{1} << m;
  }

  const std::vector<Year> candidates = candidate_times(schedule);
  SweepResult out;
  bool first = true;
  for (Year t = 1; t <= schedule.horizon(); ++t) {
    PlanSearch search = best_plan_exhaustive(model, schedule, t);
    out.evaluations += search.evaluations;
    if (first || improves_global(search.best, out.best)) {
      out.best = search.best;
      first = false;
    }
    if (std::binary_search(candidates.begin(), candidates.end(), t)) {
      out.per_candidate.push_back(std::move(search.best));
    }
  }
  return out;
}

}  // namespace pmsched
