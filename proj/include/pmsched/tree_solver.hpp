#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/schedule.hpp"

namespace pmsched {

/// Outcome of the pruned-tree search at a single candidate inspection time.
/// `leaves` holds every surviving full branch (each one a chained plan), in
/// construction order; the cost of each was recomputed from scratch and
/// counted in `leaf_evaluations`.
struct TreeSearch {
  PMSolution best;
  std::vector<RepairPlan> leaves;
  std::uint64_t leaf_evaluations = 0;
};

/// Builds the generation-by-generation search tree for an inspection at
/// year t and returns the cheapest surviving branch.
///
/// Generation i places group i at some epoch, labeled with the partial cost
/// of the branch so far (inspection cost included). To grow generation i+1,
/// the node with the minimum label spawns two children -- group i+1 at its
/// own deadline (a fresh epoch, paying one outage charge) and group i+1
/// merged onto the minimum node's epoch -- while every other node whose
/// epoch is later than the minimum's spawns a single merged child. All
/// remaining branches die. Merging never pays an outage charge: the target
/// epoch is already in use on that branch, or is year 0.
///
/// t must be one of candidate_times(schedule); an empty window returns the
/// empty plan immediately. Surviving leaf costs are recomputed with
/// total_cost, so results compare bit-for-bit with the enumeration oracles.
TreeSearch tree_search(const CostModel& model, const PrimarySchedule& schedule,
                       Year t);

/// The full decision-support report: the best plan for every candidate
/// inspection time, in descending time order, plus the global optimum
/// (ties prefer the later inspection).
struct TreeReport {
  std::vector<PMSolution> per_candidate;
  PMSolution best;
  std::uint64_t evaluations = 0;
};

TreeReport tree_solve(const CostModel& model, const PrimarySchedule& schedule);

}  // namespace pmsched
