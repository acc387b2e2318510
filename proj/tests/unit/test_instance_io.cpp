#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pmsched/instance_io.hpp"
#include "pmsched/report.hpp"

using namespace pmsched;

namespace {

const std::string kFixtures = PMSCHED_FIXTURES;

Instance parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance_text(in, "inline");
}

const char* kGoodBody =
    "unit kiloeuros\nhorizon 30\ndiscount 0.08\ninflation 0.01\n"
    "insp0 500\nrep0 60\nout0 300\n";

}  // namespace

TEST_CASE("bundled fixture parses with unit normalization") {
  const Instance inst = parse_instance(kFixtures + "/example05.pmi");
  CHECK(inst.name == "example05.pmi");
  CHECK(inst.schedule.group_count() == 7);
  CHECK(inst.schedule.horizon() == 30);
  CHECK(inst.schedule.deadline(1) == 2);
  CHECK(inst.schedule.deadline(7) == 28);
  CHECK(inst.schedule.defect_count(5) == 6);
  CHECK(inst.model.insp0() == 500'000.0);  // kiloeuros scaled to euros
  CHECK(inst.model.rep0() == 60'000.0);
  CHECK(inst.model.out0() == 300'000.0);
  CHECK(inst.model.discount() == 0.08);
}

TEST_CASE("json and text forms of the same instance agree") {
  const Instance a = parse_instance(kFixtures + "/example05.pmi");
  const Instance b = parse_instance(kFixtures + "/example05.json");
  CHECK(a.schedule.group_count() == b.schedule.group_count());
  for (int i = 1; i <= a.schedule.group_count(); ++i) {
    CHECK(a.schedule.deadline(i) == b.schedule.deadline(i));
    CHECK(a.schedule.defect_count(i) == b.schedule.defect_count(i));
  }
  CHECK(a.model.insp0() == b.model.insp0());
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(parse_instance(kFixtures + "/no_such_file.pmi"), IoError);
}

TEST_CASE("schema diagnostics carry line and field context") {
  CHECK_THROWS_WITH_AS(parse_text("unit euros\nbogus 3\n"),
                       doctest::Contains("unknown key 'bogus'"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text("unit euros\nbogus 3\n"),
                       doctest::Contains(":2:"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text(std::string(kGoodBody) + "horizon 30\ngroup 5 1\n"),
                       doctest::Contains("duplicate key"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text(std::string(kGoodBody)),
                       doctest::Contains("group"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text("horizon 30\ndiscount 0.08\ninflation 0.01\n"
                                  "insp0 500\nrep0 60\nout0 300\ngroup 5 1\n"),
                       doctest::Contains("missing required field 'unit'"),
                       SchemaError);
  CHECK_THROWS_WITH_AS(parse_text(std::string(kGoodBody) + "group five 1\n"),
                       doctest::Contains("expected a number"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text(std::string(kGoodBody) + "group 5 1 9\n"),
                       doctest::Contains("trailing"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_text("unit dollars\nhorizon 30\ndiscount 0.08\n"
                                  "inflation 0.01\ninsp0 500\nrep0 60\n"
                                  "out0 300\ngroup 5 1\n"),
                       doctest::Contains("euros"), SchemaError);
}

TEST_CASE("domain violations surface with the offending group") {
  CHECK_THROWS_WITH_AS(parse_text(std::string(kGoodBody) + "group 30 1\n"),
                       doctest::Contains("group 1"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_text(std::string(kGoodBody) + "group 5 1\ngroup 5 2\n"),
      doctest::Contains("group 2"), ValidationError);
}

TEST_CASE("comment and blank lines are ignored") {
  const Instance inst = parse_text(std::string("# header\n\n") + kGoodBody +
                                   "group 5 2  # trailing comment\n");
  CHECK(inst.schedule.group_count() == 1);
  CHECK(inst.schedule.defect_count(1) == 2);
}

TEST_CASE("solver report for the bundled seven-group instance") {
  const Instance inst = parse_instance(kFixtures + "/example05.pmi");
  const DecisionReport report = run_solver(inst, Algorithm::tree);

  SUBCASE("rows are in descending inspection order with one optimum") {
    REQUIRE(report.rows.size() == 8);
    int optima = 0;
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
      CHECK(report.rows[i].inspection > report.rows[i + 1].inspection);
    }
    for (const auto& row : report.rows) optima += row.optimal;
    CHECK(optima == 1);
    CHECK(report.best_inspection == 23);
    CHECK(std::fabs(report.best_cost - 347057.04) < 0.01);
  }

  SUBCASE("table rendering is deterministic and marks the optimum") {
    const std::string table = render_table(report, inst);
    CHECK(table == render_table(run_solver(inst, Algorithm::tree), inst));
    CHECK(table.find("347057.04") != std::string::npos);
    CHECK(table.find("*         23") != std::string::npos);
    CHECK(table.find("{(3,T_0), (0,T_1), (0,T_2), (0,T_3)}") !=
          std::string::npos);
  }

  SUBCASE("csv and table render the same rounded numbers as the raw json") {
    const std::string csv = render_csv(report, inst);
    const nlohmann::json doc = nlohmann::json::parse(render_json(report, inst));
    for (const auto& row : doc.at("rows")) {
      const std::string rounded =
          format_money(row.at("total_cost").get<double>());
      CHECK(csv.find(rounded) != std::string::npos);
    }
  }

  SUBCASE("json rows re-evaluate to their stated costs") {
    const nlohmann::json doc = nlohmann::json::parse(render_json(report, inst));
    CHECK(doc.at("schema") == "pmsched-report/1");
    for (const auto& row : doc.at("rows")) {
      RepairPlan plan{row.at("assignment").get<std::vector<int>>()};
      const double recomputed = total_cost(
          inst.model, inst.schedule, row.at("inspection_time").get<int>(),
          plan);
      CHECK(recomputed == row.at("total_cost").get<double>());
    }
  }
}

TEST_CASE("all three algorithms produce the same report on a small instance") {
  const Instance inst = parse_instance(kFixtures + "/example01.pmi");
  const DecisionReport tree = run_solver(inst, Algorithm::tree);
  const DecisionReport simp = run_solver(inst, Algorithm::simplified);
  const DecisionReport comp = run_solver(inst, Algorithm::comprehensive);
  REQUIRE(tree.rows.size() == simp.rows.size());
  REQUIRE(tree.rows.size() == comp.rows.size());
  for (std::size_t i = 0; i < tree.rows.size(); ++i) {
    CHECK(tree.rows[i].inspection == simp.rows[i].inspection);
    CHECK(tree.rows[i].cost == simp.rows[i].cost);
    CHECK(tree.rows[i].cost == comp.rows[i].cost);
  }
  CHECK(std::fabs(tree.best_cost - 306972.81) < 0.01);
}

TEST_CASE("comprehensive run honors the work budget") {
  const Instance inst = parse_instance(kFixtures + "/example05.pmi");
  CHECK_THROWS_AS(run_solver(inst, Algorithm::comprehensive, 10),
                  WorkBudgetError);
}

TEST_CASE("money renders with two decimals, ties to even") {
  CHECK(format_money(347057.041) == "347057.04");
  CHECK(format_money(0.125) == "0.12");   // exact binary tie rounds to even
  CHECK(format_money(0.375) == "0.38");
  CHECK(format_money(60000.0) == "60000.00");
}

TEST_CASE("algorithm names round-trip") {
  for (const auto algo :
       {Algorithm::tree, Algorithm::simplified, Algorithm::comprehensive}) {
    CHECK(algorithm_from_name(algorithm_name(algo)) == algo);
  }
  CHECK_THROWS_AS(algorithm_from_name("fast"), ValidationError);
}

TEST_CASE("bench compares the three algorithms") {
  const Instance inst = parse_instance(kFixtures + "/example01.pmi");
  const BenchRow row = bench_instance(inst);
  CHECK(row.group_count == 3);
  CHECK(row.agree);
  CHECK(std::fabs(row.optimal_cost - 306972.81) < 0.01);
  CHECK(row.tree_evals <= 4u * 5u / 2u - 1u);
  CHECK(row.simplified_evals == 14);
  const std::string table = render_bench({row});
  CHECK(table.find("example01.pmi") != std::string::npos);
}
