#pragma once

#include <vector>

#include "pmsched/economics.hpp"
#include "pmsched/errors.hpp"

namespace pmsched {

/// One group of defects sharing a repair deadline: the group's `count`
/// defects must all be repaired no later than year `deadline`.
struct DefectGroup {
  int count;
  Year deadline;
};

/// The defect groups left unrepaired at the primary inspection, with their
/// deadlines, plus the planning horizon. Deadlines are strictly increasing
/// and strictly inside (0, horizon). Immutable after construction.
///
/// Groups are indexed 1..N; epoch index 0 denotes the primary inspection
/// year T_0 = 0.
class PrimarySchedule {
 public:
  /// Validates eagerly; diagnostics name the offending group index.
  PrimarySchedule(Year horizon, std::vector<DefectGroup> groups);

  Year horizon() const { return horizon_; }
  const std::vector<DefectGroup>& groups() const { return groups_; }

  /// N, the number of defect groups.
  int group_count() const { return static_cast<int>(groups_.size()); }

  /// n_i for i in [1, N].
  int defect_count(int i) const { return groups_[i - 1].count; }

  /// T_j for j in [0, N]; T_0 = 0.
  Year deadline(int j) const { return j == 0 ? 0 : groups_[j - 1].deadline; }

  /// Number of groups whose deadline falls inside the inspection window
  /// (0, t]. t must lie in [1, horizon].
  int window_size(Year t) const;

 private:
  Year horizon_;
  std::vector<DefectGroup> groups_;
};

/// Inspection times worth considering: the year before each deadline
/// (dropped when that would be year 0) plus the horizon itself. Strictly
/// increasing. The total-cost curve has its local minima exactly here, so
/// the global optimum never lies elsewhere.
std::vector<Year> candidate_times(const PrimarySchedule& schedule);

/// Assignment of every in-window group to a repair epoch.
/// epoch_index[k-1] = j places group k's repairs at year T_j; j <= k, so
/// repairs may only be moved earlier than the group's own deadline, and a
/// group is never split across epochs.
struct RepairPlan {
  std::vector<int> epoch_index;

  int window_size() const { return static_cast<int>(epoch_index.size()); }
  bool operator==(const RepairPlan&) const = default;
};

/// True when every group sits either at its own deadline or at the epoch of
/// the previous group (epoch 0 for the first). The optimum always lies in
/// this 2^window family.
bool is_chained(const RepairPlan& plan);

/// Builds the chained plan for window (0, t]: group k goes to its own
/// deadline when at_deadline[k-1] is set, otherwise it joins the previous
/// group's epoch (the first group falls back to epoch 0).
RepairPlan chained_plan(const PrimarySchedule& schedule, Year t,
                        const std::vector<bool>& at_deadline);

/// Total discounted cost of inspecting at year t and executing `plan`:
/// inspection cost at t, per-defect repair costs at the assigned epochs, and
/// one out-of-service charge per distinct nonzero epoch in use. Epoch 0
/// never incurs an outage charge (those repairs ride on the primary
/// inspection), and an epoch shared by several groups is charged once.
///
/// Evaluation order is fixed (groups in index order, then outage charges in
/// ascending epoch order) so equal plans always produce bit-identical sums.
double total_cost(const CostModel& model, const PrimarySchedule& schedule,
                  Year t, const RepairPlan& plan);

/// Defect counts aggregated per epoch index 0..window for display and
/// encoding: element j is the number of defects repaired at T_j.
std::vector<int> epoch_totals(const PrimarySchedule& schedule, Year t,
                              const RepairPlan& plan);

/// An inspection time, the repair plan executed inside its window, and the
/// plan's total discounted cost.
struct PMSolution {
  Year inspection = 0;
  RepairPlan plan;
  double cost = 0.0;
};

/// Deterministic preference between equal-cost plans: the assignment that is
/// lexicographically larger (more groups kept at their own deadlines) wins.
bool prefer_plan(const RepairPlan& candidate, const RepairPlan& incumbent);

}  // namespace pmsched
