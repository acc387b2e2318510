#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmsched/report.hpp"

namespace {

// 0 success, 2 parse/validation error, 3 work budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

std::uint64_t work_budget_from_env() {
  const char* raw = std::getenv("PMSCHED_WORK_BUDGET");
  if (raw == nullptr || *raw == '\0') return pmsched::kDefaultWorkBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw pmsched::ValidationError(
        std::string("PMSCHED_WORK_BUDGET must be a positive integer, got '") +
        raw + "'");
  }
  return value;
}

int run_solve(const std::string& path, const std::string& algorithm,
              const std::string& format, const std::string& out_path) {
  const pmsched::Instance instance = pmsched::parse_instance(path);
  const pmsched::DecisionReport report = pmsched::run_solver(
      instance, pmsched::algorithm_from_name(algorithm),
      work_budget_from_env());

  std::string rendered;
  if (format == "table") {
    rendered = pmsched::render_table(report, instance);
  } else if (format == "json") {
    rendered = pmsched::render_json(report, instance);
  } else if (format == "csv") {
    rendered = pmsched::render_csv(report, instance);
  } else {
    throw pmsched::ValidationError("unknown format '" + format +
                                   "' (expected table, json or csv)");
  }

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pmsched::IoError("cannot open output file '" + out_path + "'");
    out << rendered;
  }
  return kExitOk;
}

int run_bench(const std::vector<std::string>& paths) {
  std::vector<pmsched::BenchRow> rows;
  const std::uint64_t budget = work_budget_from_env();
  for (const auto& path : paths) {
    rows.push_back(pmsched::bench_instance(pmsched::parse_instance(path), budget));
  }
  std::cout << pmsched::render_bench(rows);
  return kExitOk;
}

int run_check(const std::string& path) {
  const pmsched::Instance instance = pmsched::parse_instance(path);
  const auto candidates = pmsched::candidate_times(instance.schedule);
  std::cout << "OK: " << instance.name
            << " (N=" << instance.schedule.group_count()
            << ", horizon=" << instance.schedule.horizon() << ", "
            << candidates.size() << " candidate inspection times)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preventive-maintenance scheduling: next inspection time and "
               "repair plan minimizing total discounted cost"};
  app.require_subcommand(1);

  std::string path, algorithm = "tree", format = "table", out_path;
  std::vector<std::string> bench_paths;

  auto* solve = app.add_subcommand(
      "solve", "Solve one instance and print the decision report");
  solve->add_option("file", path, "instance file (.pmi text or .json)")
      ->required();
  solve->add_option("--algorithm", algorithm,
                    "tree | simplified | comprehensive")
      ->default_val("tree");
  solve->add_option("--format", format, "table | json | csv")
      ->default_val("table");
  solve->add_option("--out", out_path, "write the report here instead of stdout");

  auto* bench = app.add_subcommand(
      "bench", "Compare all three algorithms across instances");
  bench->add_option("files", bench_paths, "instance files")->required();

  auto* check = app.add_subcommand("check", "Validate an instance file");
  check->add_option("file", path, "instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(path, algorithm, format, out_path);
    if (bench->parsed()) return run_bench(bench_paths);
    if (check->parsed()) return run_check(path);
  } catch (const pmsched::WorkBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const pmsched::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const pmsched::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const pmsched::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
