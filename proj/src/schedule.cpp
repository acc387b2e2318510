#include "pmsched/schedule.hpp"

#include <algorithm>
#include <string>

namespace pmsched {

PrimarySchedule::PrimarySchedule(Year horizon, std::vector<DefectGroup> groups)
    : horizon_(horizon), groups_(std::move(groups)) {
  if (horizon_ < 1) {
    throw ValidationError("schedule: horizon must be >= 1, got " +
                          std::to_string(horizon_));
  }
  if (groups_.empty()) {
    throw ValidationError("schedule: at least one defect group is required");
  }
  Year prev = 0;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    const auto& g = groups_[i];
    const std::string where = "group " + std::to_string(i + 1);
    if (g.count < 1) {
      throw ValidationError("schedule: " + where + " has count " +
                            std::to_string(g.count) + ", expected >= 1");
    }
    if (g.deadline <= prev) {
      throw ValidationError("schedule: " + where + " deadline " +
                            std::to_string(g.deadline) +
                            " does not increase past " + std::to_string(prev));
    }
    if (g.deadline >= horizon_) {
      throw ValidationError("schedule: " + where + " deadline " +
                            std::to_string(g.deadline) +
                            " must lie strictly before the horizon " +
                            std::to_string(horizon_));
    }
    prev = g.deadline;
  }
}

int PrimarySchedule::window_size(Year t) const {
  if (t < 1 || t > horizon_) {
    throw ValidationError("window: inspection year " + std::to_string(t) +
                          " outside [1, " + std::to_string(horizon_) + "]");
  }
  int n = 0;
  for (const auto& g : groups_) {
    if (g.deadline <= t) ++n;
  }
  return n;
}

std::vector<Year> candidate_times(const PrimarySchedule& schedule) {
  std::vector<Year> times;
  times.reserve(schedule.groups().size() + 1);
  for (const auto& g : schedule.groups()) {
    if (g.deadline - 1 >= 1) times.push_back(g.deadline - 1);
  }
  times.push_back(schedule.horizon());
  return times;  // deadlines are strictly increasing, so this is sorted
}

bool is_chained(const RepairPlan& plan) {
  int prev = 0;
  for (int k = 1; k <= plan.window_size(); ++k) {
    const int j = plan.epoch_index[k - 1];
    if (j != k && j != prev) return false;
    prev = j;
  }
  return true;
}

RepairPlan chained_plan(const PrimarySchedule& schedule, Year t,
                        const std::vector<bool>& at_deadline) {
  const int m = schedule.window_size(t);
  if (static_cast<int>(at_deadline.size()) != m) {
    throw ValidationError("chained plan: got " +
                          std::to_string(at_deadline.size()) +
                          " flags for a window of " + std::to_string(m));
  }
  RepairPlan plan;
  plan.epoch_index.resize(m);
  int prev = 0;
  for (int k = 1; k <= m; ++k) {
    prev = at_deadline[k - 1] ? k : prev;
    plan.epoch_index[k - 1] = prev;
  }
  return plan;
}

double total_cost(const CostModel& model, const PrimarySchedule& schedule,
                  Year t, const RepairPlan& plan) {
  const int m = schedule.window_size(t);
  if (plan.window_size() != m) {
    throw ValidationError("plan covers " + std::to_string(plan.window_size()) +
                          " groups but the window (0, " + std::to_string(t) +
                          "] holds " + std::to_string(m));
  }
  double cost = model.inspection_cost(t);
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 1; k <= m; ++k) {
    const int j = plan.epoch_index[k - 1];
    if (j < 0 || j > k) {
      throw ValidationError("plan: group " + std::to_string(k) +
                            " assigned to epoch index " + std::to_string(j) +
                            ", which is after its deadline");
    }
    cost += schedule.defect_count(k) * model.repair_cost(schedule.deadline(j));
    used[j] = 1;
  }
  for (int j = 1; j <= m; ++j) {
    if (used[j]) cost += model.outage_cost(schedule.deadline(j));
  }
  return cost;
}

std::vector<int> epoch_totals(const PrimarySchedule& schedule, Year t,
                              const RepairPlan& plan) {
  const int m = schedule.window_size(t);
  if (plan.window_size() != m) {
    throw ValidationError("plan covers " + std::to_string(plan.window_size()) +
                          " groups but the window (0, " + std::to_string(t) +
                          "] holds " + std::to_string(m));
  }
  std::vector<int> totals(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 1; k <= m; ++k) {
    totals[plan.epoch_index[k - 1]] += schedule.defect_count(k);
  }
  return totals;
}

bool prefer_plan(const RepairPlan& candidate, const RepairPlan& incumbent) {
  return std::lexicographical_compare(incumbent.epoch_index.begin(),
                                      incumbent.epoch_index.end(),
                                      candidate.epoch_index.begin(),
                                      candidate.epoch_index.end());
}

}  // namespace pmsched
