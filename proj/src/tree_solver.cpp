#include "pmsched/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace pmsched {

namespace {

struct Node {
  int epoch;     // epoch index l: this generation's group repairs at T_l
  double label;  // partial cost of the branch up to this node
  int parent;    // index into the previous generation (-1 at generation 1)
};

// Smallest label wins; the latest epoch breaks ties.
std::size_t min_label_index(const std::vector<Node>& generation) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < generation.size(); ++i) {
    const bool better =
        generation[i].label < generation[best].label ||
        (generation[i].label == generation[best].label &&
         generation[i].epoch > generation[best].epoch);
    if (better) best = i;
  }
  return best;
}

}  // namespace

TreeSearch tree_search(const CostModel& model, const PrimarySchedule& schedule,
                       Year t) {
  const std::vector<Year> candidates = candidate_times(schedule);
  if (!std::binary_search(candidates.begin(), candidates.end(), t)) {
    throw ValidationError("tree search: year " + std::to_string(t) +
                          " is not a candidate inspection time");
  }

  TreeSearch out;
  out.best.inspection = t;
  const int m = schedule.window_size(t);
  if (m == 0) {
    out.best.cost = total_cost(model, schedule, t, RepairPlan{});
    return out;
  }

  std::vector<std::vector<Node>> generations;
  generations.reserve(static_cast<std::size_t>(m));

  const double base = model.inspection_cost(t);
  const double n1 = schedule.defect_count(1);
  generations.push_back(
      {{1,
        base + n1 * model.repair_cost(schedule.deadline(1)) +
            model.outage_cost(schedule.deadline(1)),
        -1},
       {0, base + n1 * model.repair_cost(0), -1}});

  for (int i = 1; i < m; ++i) {
    const std::vector<Node>& cur = generations.back();
    const std::size_t min_idx = min_label_index(cur);
    const Node& mn = cur[min_idx];
    const int g = i + 1;
    const double ng = schedule.defect_count(g);

    std::vector<Node> next;
    next.reserve(cur.size() + 1);
    next.push_back({g,
                    mn.label + ng * model.repair_cost(schedule.deadline(g)) +
                        model.outage_cost(schedule.deadline(g)),
                    static_cast<int>(min_idx)});
    next.push_back({mn.epoch,
                    mn.label + ng * model.repair_cost(schedule.deadline(mn.epoch)),
                    static_cast<int>(min_idx)});

    // Survivors: nodes whose epoch's repair cost undercuts the minimum
    // node's. Visited in descending epoch order.
    std::vector<std::size_t> others;
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      if (idx != min_idx && cur[idx].epoch > mn.epoch) others.push_back(idx);
    }
    std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
      return cur[a].epoch > cur[b].epoch;
    });
    for (const std::size_t idx : others) {
      const Node& node = cur[idx];
      next.push_back(
          {node.epoch,
           node.label + ng * model.repair_cost(schedule.deadline(node.epoch)),
           static_cast<int>(idx)});
    }

    assert(next.size() <= static_cast<std::size_t>(g) + 1);
    generations.push_back(std::move(next));
  }

  // Evaluate the surviving branches from scratch and keep the cheapest.
  bool first = true;
  const std::vector<Node>& last = generations.back();
  for (std::size_t leaf = 0; leaf < last.size(); ++leaf) {
    RepairPlan plan;
    plan.epoch_index.resize(static_cast<std::size_t>(m));
    int idx = static_cast<int>(leaf);
    for (int i = m - 1; i >= 0; --i) {
      const Node& node = generations[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(idx)];
      plan.epoch_index[static_cast<std::size_t>(i)] = node.epoch;
      idx = node.parent;
    }
    const double cost = total_cost(model, schedule, t, plan);
    ++out.leaf_evaluations;
    if (first || cost < out.best.cost ||
        (cost == out.best.cost && prefer_plan(plan, out.best.plan))) {
      out.best.plan = plan;
      out.best.cost = cost;
      first = false;
    }
    out.leaves.push_back(std::move(plan));
  }
  return out;
}

TreeReport tree_solve(const CostModel& model, const PrimarySchedule& schedule) {
  TreeReport out;
  bool first = true;
  for (const Year t : candidate_times(schedule)) {
    TreeSearch search = tree_search(model, schedule, t);
    out.evaluations += search.leaf_evaluations;
    if (first || search.best.cost < out.best.cost ||
        (search.best.cost == out.best.cost &&
         search.best.inspection > out.best.inspection)) {
      out.best = search.best;
      first = false;
    }
    out.per_candidate.push_back(std::move(search.best));
  }
  // Decision-support layout: latest inspection first.
  std::reverse(out.per_candidate.begin(), out.per_candidate.end());
  return out;
}

}  // namespace pmsched
