#include "pmsched/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "pmsched/tree_solver.hpp"

namespace pmsched {

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "tree") return Algorithm::tree;
  if (name == "simplified") return Algorithm::simplified;
  if (name == "comprehensive") return Algorithm::comprehensive;
  throw ValidationError("unknown algorithm '" + name +
                        "' (expected tree, simplified or comprehensive)");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::tree: return "tree";
    case Algorithm::simplified: return "simplified";
    case Algorithm::comprehensive: return "comprehensive";
  }
  return "?";
}

DecisionReport run_solver(const Instance& instance, Algorithm algorithm,
                          std::uint64_t budget) {
  DecisionReport report;
  report.instance = instance.name;
  report.algorithm = algorithm;

  std::vector<PMSolution> solutions;
  PMSolution best;
  if (algorithm == Algorithm::tree) {
    TreeReport r = tree_solve(instance.model, instance.schedule);
    solutions = std::move(r.per_candidate);  // already latest-first
    best = std::move(r.best);
    report.evaluations = r.evaluations;
  } else {
    SweepResult r = algorithm == Algorithm::simplified
                        ? simplified_solve(instance.model, instance.schedule)
                        : comprehensive_solve(instance.model,
                                              instance.schedule, budget);
    solutions = std::move(r.per_candidate);
    std::reverse(solutions.begin(), solutions.end());
    best = std::move(r.best);
    report.evaluations = r.evaluations;
  }

  report.best_inspection = best.inspection;
  report.best_cost = best.cost;
  report.rows.reserve(solutions.size());
  for (auto& sol : solutions) {
    report.rows.push_back({sol.inspection, std::move(sol.plan), sol.cost,
                           sol.inspection == best.inspection});
  }
  return report;
}

std::string format_money(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string format_plan(const PrimarySchedule& schedule, Year t,
                        const RepairPlan& plan) {
  const std::vector<int> totals = epoch_totals(schedule, t, plan);
  std::string out = "{";
  for (std::size_t j = 0; j < totals.size(); ++j) {
    if (j > 0) out += ", ";
    out += "(" + std::to_string(totals[j]) + ",T_" + std::to_string(j) + ")";
  }
  return out + "}";
}

std::string render_table(const DecisionReport& report,
                         const Instance& instance) {
  std::ostringstream out;
  out << "instance: " << report.instance
      << "  (N=" << instance.schedule.group_count()
      << ", horizon=" << instance.schedule.horizon() << ")\n";
  out << "algorithm: " << algorithm_name(report.algorithm) << "\n\n";

  std::vector<std::string> plans;
  std::size_t width = sizeof "repair plan" - 1;
  for (const auto& row : report.rows) {
    plans.push_back(format_plan(instance.schedule, row.inspection, row.plan));
    width = std::max(width, plans.back().size());
  }
  out << "  inspection  repair plan" << std::string(width - 11, ' ')
      << "  total cost\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    char head[32];
    std::snprintf(head, sizeof head, "%c %10d  ", row.optimal ? '*' : ' ',
                  row.inspection);
    out << head << plans[i] << std::string(width - plans[i].size(), ' ')
        << "  " << format_money(row.cost) << "\n";
  }
  out << "\noptimum: inspection at year " << report.best_inspection
      << ", total cost " << format_money(report.best_cost) << "\n";
  out << "plan evaluations: " << report.evaluations << "\n";
  return out.str();
}

std::string render_csv(const DecisionReport& report,
                       const Instance& instance) {
  std::ostringstream out;
  out << "inspection_time,total_cost,optimal,plan\n";
  for (const auto& row : report.rows) {
    out << row.inspection << "," << format_money(row.cost) << ","
        << (row.optimal ? 1 : 0) << ",\""
        << format_plan(instance.schedule, row.inspection, row.plan) << "\"\n";
  }
  return out.str();
}

std::string render_json(const DecisionReport& report,
                        const Instance& instance) {
  nlohmann::json doc;
  doc["schema"] = "pmsched-report/1";
  doc["instance"] = report.instance;
  doc["algorithm"] = algorithm_name(report.algorithm);
  doc["unit"] = "euros";
  doc["horizon"] = instance.schedule.horizon();
  doc["evaluations"] = report.evaluations;
  doc["optimum"] = {{"inspection_time", report.best_inspection},
                    {"total_cost", report.best_cost}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json item;
    item["inspection_time"] = row.inspection;
    item["total_cost"] = row.cost;
    item["optimal"] = row.optimal;
    item["assignment"] = row.plan.epoch_index;
    nlohmann::json epochs = nlohmann::json::array();
    const std::vector<int> totals =
        epoch_totals(instance.schedule, row.inspection, row.plan);
    for (std::size_t j = 0; j < totals.size(); ++j) {
      epochs.push_back({{"count", totals[j]},
                        {"epoch_index", j},
                        {"year", instance.schedule.deadline(static_cast<int>(j))}});
    }
    item["plan"] = std::move(epochs);
    rows.push_back(std::move(item));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

BenchRow bench_instance(const Instance& instance, std::uint64_t budget) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start)
        .count();
  };

  BenchRow row;
  row.instance = instance.name;
  row.group_count = instance.schedule.group_count();

  auto start = clock::now();
  TreeReport tree = tree_solve(instance.model, instance.schedule);
  row.tree_ms = ms_since(start);
  row.tree_evals = tree.evaluations;

  start = clock::now();
  SweepResult simplified = simplified_solve(instance.model, instance.schedule);
  row.simplified_ms = ms_since(start);
  row.simplified_evals = simplified.evaluations;

  start = clock::now();
  SweepResult comprehensive =
      comprehensive_solve(instance.model, instance.schedule, budget);
  row.comprehensive_ms = ms_since(start);
  row.comprehensive_evals = comprehensive.evaluations;

  row.optimal_cost = tree.best.cost;
  const double tol = 1e-6;
  row.agree = std::fabs(tree.best.cost - simplified.best.cost) <= tol &&
              std::fabs(tree.best.cost - comprehensive.best.cost) <= tol;
  return row;
}

std::string render_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %3s  %12s %9s  %12s %9s  %12s %9s  %14s %6s\n",
                "instance", "N", "tree_evals", "tree_ms", "simp_evals",
                "simp_ms", "comp_evals", "comp_ms", "optimal_cost", "agree");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line,
                  "%-18s %3d  %12llu %9.3f  %12llu %9.3f  %12llu %9.3f  %14s %6s\n",
                  r.instance.c_str(), r.group_count,
                  static_cast<unsigned long long>(r.tree_evals), r.tree_ms,
                  static_cast<unsigned long long>(r.simplified_evals),
                  r.simplified_ms,
                  static_cast<unsigned long long>(r.comprehensive_evals),
                  r.comprehensive_ms, format_money(r.optimal_cost).c_str(),
                  r.agree ? "yes" : "NO");
    out << line;
  }
  return out.str();
}

}  // namespace pmsched
