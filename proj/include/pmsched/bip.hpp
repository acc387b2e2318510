#pragma once

#include <utility>
#include <vector>

#include "pmsched/schedule.hpp"

namespace pmsched {

/// Binary decision vectors for the integer-programming form of the problem.
///
/// a has length N+1: a[i-1] = 1 plans the inspection at year T_i - 1 for
/// i in 1..N, and a[N] = 1 plans it at the horizon. b has length N+1,
/// indexed 0..N: b[j] = 1 plans repairs at year T_j (T_0 = 0). alpha is 1
/// unless T_1 = 1, in which case the year-before-T_1 inspection slot would
/// coincide with the primary inspection and is disabled.
struct BipInstance {
  std::vector<int> a;
  std::vector<int> b;
  int alpha = 1;
};

/// Builds an instance against `schedule`, deriving alpha and validating
/// vector lengths and 0/1-ness. Feasibility is checked separately.
BipInstance make_bip(const PrimarySchedule& schedule, std::vector<int> a,
                     std::vector<int> b);

/// Throws ValidationError naming the violated constraint:
///   single-inspection     alpha*a_1 + a_2 + ... + a_{N+1} = 1
///   inspection-at-primary a_1 must be 0 when T_1 = 1
///   t0-t1-exclusive       b_0 + b_1 = 1
///   repair-count-range    1 <= b_0 + ... + b_N <= N
void check_feasible(const PrimarySchedule& schedule, const BipInstance& inst);

/// The closed-form objective, evaluated literally as the nested product
/// expression (no algebraic simplification), giving an arithmetic path
/// independent of total_cost. Repairs planned at epoch T_j absorb every
/// following group up to the next planned epoch; terms for epochs past the
/// inspection window are masked out by the (1 - a_i) products.
double objective(const CostModel& model, const PrimarySchedule& schedule,
                 const BipInstance& inst);

/// Inspection time selected by a, and the in-window repair plan implied by
/// b: each in-window group goes to the latest planned epoch at or before its
/// own deadline. Bits for epochs beyond the window do not alter the plan.
std::pair<Year, RepairPlan> decode(const PrimarySchedule& schedule,
                                   const BipInstance& inst);

/// True when the nested repair term of `objective` charges exactly the
/// decoded in-window plan: either the window covers all groups, or the bit
/// just past the window is set, stopping out-of-window groups from being
/// absorbed into an in-window epoch. objective(inst) agrees with
/// total_cost(decode(inst)) precisely on such instances.
bool window_consistent(const PrimarySchedule& schedule,
                       const BipInstance& inst);

/// Canonical encoding of a chained plan for an inspection at year t (which
/// must be a candidate time): bits for the plan's epochs, the bit just past
/// the window set when groups remain outside it, everything further zero.
/// decode(encode(t, plan)) recovers (t, plan), and encode's output is
/// always window-consistent.
BipInstance encode(const PrimarySchedule& schedule, Year t,
                   const RepairPlan& plan);

}  // namespace pmsched
