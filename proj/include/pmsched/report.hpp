#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmsched/instance_io.hpp"
#include "pmsched/oracles.hpp"
#include "pmsched/schedule.hpp"

namespace pmsched {

enum class Algorithm { tree, simplified, comprehensive };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

/// One row of the decision-support table: a candidate inspection time, the
/// best plan inside its window, its total cost, and whether it is the
/// global optimum.
struct ReportRow {
  Year inspection = 0;
  RepairPlan plan;
  double cost = 0.0;
  bool optimal = false;
};

/// The per-candidate solutions (latest inspection first), the global
/// optimum, and how many full plans the algorithm evaluated to get there.
struct DecisionReport {
  std::string instance;
  Algorithm algorithm = Algorithm::tree;
  std::vector<ReportRow> rows;
  Year best_inspection = 0;
  double best_cost = 0.0;
  std::uint64_t evaluations = 0;
};

/// Runs the chosen algorithm and assembles its report. `budget` applies to
/// the comprehensive scan only.
DecisionReport run_solver(const Instance& instance, Algorithm algorithm,
                          std::uint64_t budget = kDefaultWorkBudget);

/// Money with two decimals (ties round half to even).
std::string format_money(double value);

/// A plan in display form: defect totals per epoch, zero-count epochs
/// included, e.g. {(4,T_0), (0,T_1), (0,T_2)}.
std::string format_plan(const PrimarySchedule& schedule, Year t,
                        const RepairPlan& plan);

/// Renderings of the same report. Rounding happens only here; the JSON form
/// carries full-precision costs plus the raw assignments so a report can be
/// re-evaluated bit-for-bit.
std::string render_table(const DecisionReport& report,
                         const Instance& instance);
std::string render_csv(const DecisionReport& report, const Instance& instance);
std::string render_json(const DecisionReport& report,
                        const Instance& instance);

/// One line of the benchmark comparison: evaluation counters, wall time and
/// optimal cost per algorithm on one instance.
struct BenchRow {
  std::string instance;
  int group_count = 0;
  std::uint64_t tree_evals = 0, simplified_evals = 0, comprehensive_evals = 0;
  double tree_ms = 0.0, simplified_ms = 0.0, comprehensive_ms = 0.0;
  double optimal_cost = 0.0;
  bool agree = false;  // all three algorithms returned the same optimal cost
};

BenchRow bench_instance(const Instance& instance,
                        std::uint64_t budget = kDefaultWorkBudget);
std::string render_bench(const std::vector<BenchRow>& rows);

}  // namespace pmsched
