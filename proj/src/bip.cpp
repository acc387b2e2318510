#include "pmsched/bip.hpp"

#include <numeric>
#include <string>

namespace pmsched {

namespace {

void require_bits(const std::vector<int>& v, const char* name) {
  for (const int bit : v) {
    if (bit != 0 && bit != 1) {
      throw ValidationError(std::string("bip: vector ") + name +
                            " must be 0/1, got " + std::to_string(bit));
    }
  }
}

}  // namespace

BipInstance make_bip(const PrimarySchedule& schedule, std::vector<int> a,
                     std::vector<int> b) {
  const std::size_t want = static_cast<std::size_t>(schedule.group_count()) + 1;
  if (a.size() != want || b.size() != want) {
    throw ValidationError("bip: a and b must both have length N+1 = " +
                          std::to_string(want));
  }
  require_bits(a, "a");
  require_bits(b, "b");
  return BipInstance{std::move(a), std::move(b),
                     schedule.deadline(1) != 1 ? 1 : 0};
}

void check_feasible(const PrimarySchedule& schedule, const BipInstance& inst) {
  const int n = schedule.group_count();
  if (inst.alpha == 0 && inst.a[0] == 1) {
    throw ValidationError(
        "bip: constraint inspection-at-primary violated (T_1 = 1, so an "
        "inspection one year before it would coincide with year 0)");
  }
  int inspections = inst.alpha * inst.a[0];
  for (int i = 2; i <= n + 1; ++i) inspections += inst.a[i - 1];
  if (inspections != 1) {
    throw ValidationError("bip: constraint single-inspection violated (" +
                          std::to_string(inspections) +
                          " inspections planned, expected exactly 1)");
  }
  const int repairs = std::accumulate(inst.b.begin(), inst.b.end(), 0);
  if (repairs < 1 || repairs > n) {
    throw ValidationError("bip: constraint repair-count-range violated (" +
                          std::to_string(repairs) +
                          " repair epochs, expected 1.." + std::to_string(n) +
                          ")");
  }
  if (inst.b[0] + inst.b[1] != 1) {
    throw ValidationError(
        "bip: constraint t0-t1-exclusive violated (repairs must be planned "
        "at exactly one of T_0 and T_1)");
  }
}

double objective(const CostModel& model, const PrimarySchedule& schedule,
                 const BipInstance& inst) {
  check_feasible(schedule, inst);
  const int n = schedule.group_count();
  const auto& a = inst.a;
  const auto& b = inst.b;

  double cost = inst.alpha * a[0] * model.inspection_cost(schedule.deadline(1) - 1);
  for (int i = 2; i <= n; ++i) {
    cost += a[i - 1] * model.inspection_cost(schedule.deadline(i) - 1);
  }
  cost += a[n] * model.inspection_cost(schedule.horizon());

  // nested[j] = n_j + (1 - b_{j+1})(n_{j+1} + (1 - b_{j+2})(...)), n_0 = 0:
  // the defects absorbed by a repair epoch at T_j.
  std::vector<double> nested(static_cast<std::size_t>(n) + 1);
  nested[n] = schedule.defect_count(n);
  for (int j = n - 1; j >= 0; --j) {
    nested[j] = (j >= 1 ? schedule.defect_count(j) : 0) +
                (1 - b[j + 1]) * nested[j + 1];
  }

  double mask = 1.0;  // running product of (1 - a_i), i <= j
  for (int j = 0; j <= n; ++j) {
    if (j >= 1) mask *= 1 - a[j - 1];
    const double absorbed = j < n ? nested[j] : schedule.defect_count(n);
    cost += b[j] * mask * absorbed * model.repair_cost(schedule.deadline(j));
    if (j >= 1) cost += b[j] * mask * model.outage_cost(schedule.deadline(j));
  }
  return cost;
}

std::pair<Year, RepairPlan> decode(const PrimarySchedule& schedule,
                                   const BipInstance& inst) {
  check_feasible(schedule, inst);
  const int n = schedule.group_count();
  Year t = 0;
  if (inst.alpha == 1 && inst.a[0] == 1) t = schedule.deadline(1) - 1;
  for (int i = 2; i <= n; ++i) {
    if (inst.a[i - 1] == 1) t = schedule.deadline(i) - 1;
  }
  if (inst.a[n] == 1) t = schedule.horizon();

  const int m = schedule.window_size(t);
  RepairPlan plan;
  plan.epoch_index.resize(static_cast<std::size_t>(m));
  int latest = inst.b[0] == 1 ? 0 : -1;
  for (int k = 1; k <= m; ++k) {
    if (inst.b[k] == 1) latest = k;
    plan.epoch_index[k - 1] = latest;  // >= 0: exactly one of b_0, b_1 is set
  }
  return {t, std::move(plan)};
}

bool window_consistent(const PrimarySchedule& schedule,
                       const BipInstance& inst) {
  const auto [t, plan] = decode(schedule, inst);
  const int m = plan.window_size();
  return m == schedule.group_count() || inst.b[m + 1] == 1;
}

BipInstance encode(const PrimarySchedule& schedule, Year t,
                   const RepairPlan& plan) {
  const int n = schedule.group_count();
  const int m = schedule.window_size(t);
  if (plan.window_size() != m) {
    throw ValidationError("bip encode: plan covers " +
                          std::to_string(plan.window_size()) +
                          " groups but the window holds " + std::to_string(m));
  }
  if (!is_chained(plan)) {
    throw ValidationError("bip encode: plan is not chained");
  }

  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  if (t == schedule.horizon()) {
    a[n] = 1;
  } else {
    int slot = 0;
    for (int i = 1; i <= n; ++i) {
      if (schedule.deadline(i) - 1 == t) slot = i;
    }
    if (slot == 0) {
      throw ValidationError("bip encode: year " + std::to_string(t) +
                            " is not a candidate inspection time");
    }
    a[slot - 1] = 1;
  }

  std::vector<int> b(static_cast<std::size_t>(n) + 1, 0);
  for (const int j : plan.epoch_index) b[j] = 1;
  if (m < n) b[m + 1] = 1;  // stop absorption at the window boundary
  return make_bip(schedule, std::move(a), std::move(b));
}

}  // namespace pmsched
