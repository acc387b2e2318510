#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmsched/bip.hpp"
#include "pmsched/instance_io.hpp"
#include "pmsched/oracles.hpp"
#include "pmsched/report.hpp"
#include "pmsched/tree_solver.hpp"

namespace py = pybind11;
using namespace pmsched;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact preventive-maintenance scheduling: next inspection time "
            "and repair plan minimizing total discounted cost";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<WorkBudgetError>(m, "WorkBudgetError",
                                          PyExc_RuntimeError);

  py::class_<CostModel>(m, "CostModel")
      .def(py::init<double, double, double, double, double>(),
           py::arg("insp0"), py::arg("rep0"), py::arg("out0"),
           py::arg("inflation"), py::arg("discount"))
      .def_property_readonly("insp0", &CostModel::insp0)
      .def_property_readonly("rep0", &CostModel::rep0)
      .def_property_readonly("out0", &CostModel::out0)
      .def_property_readonly("inflation", &CostModel::inflation)
      .def_property_readonly("discount", &CostModel::discount)
      .def("factor", &CostModel::factor, py::arg("t"))
      .def("inspection_cost", &CostModel::inspection_cost, py::arg("t"))
      .def("repair_cost", &CostModel::repair_cost, py::arg("t"))
      .def("outage_cost", &CostModel::outage_cost, py::arg("t"));

  py::class_<DefectGroup>(m, "DefectGroup")
      .def(py::init([](int count, Year deadline) {
             return DefectGroup{count, deadline};
           }),
           py::arg("count"), py::arg("deadline"))
      .def_readonly("count", &DefectGroup::count)
      .def_readonly("deadline", &DefectGroup::deadline)
      .def("__repr__", [](const DefectGroup& g) {
        return "DefectGroup(count=" + std::to_string(g.count) +
               ", deadline=" + std::to_string(g.deadline) + ")";
      });

  py::class_<PrimarySchedule>(m, "PrimarySchedule")
      .def(py::init([](Year horizon, const std::vector<std::pair<int, Year>>& groups) {
             std::vector<DefectGroup> gs;
             gs.reserve(groups.size());
             for (const auto& [count, deadline] : groups)
               gs.push_back({count, deadline});
             return PrimarySchedule(horizon, std::move(gs));
           }),
           py::arg("horizon"), py::arg("groups"),
           "groups: list of (count, deadline) pairs, deadlines increasing")
      .def_property_readonly("horizon", &PrimarySchedule::horizon)
      .def_property_readonly("group_count", &PrimarySchedule::group_count)
      .def("defect_count", &PrimarySchedule::defect_count, py::arg("i"))
      .def("deadline", &PrimarySchedule::deadline, py::arg("j"))
      .def("window_size", &PrimarySchedule::window_size, py::arg("t"));

  py::class_<RepairPlan>(m, "RepairPlan")
      .def(py::init([](std::vector<int> epochs) {
             return RepairPlan{std::move(epochs)};
           }),
           py::arg("epoch_index"))
      .def(py::init<>())
      .def_readonly("epoch_index", &RepairPlan::epoch_index)
      .def_property_readonly("window_size", &RepairPlan::window_size)
      .def(py::self == py::self)
      .def("__repr__", [](const RepairPlan& p) {
        std::string s = "RepairPlan([";
        for (std::size_t i = 0; i < p.epoch_index.size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(p.epoch_index[i]);
        }
        return s + "])";
      });

  py::class_<PMSolution>(m, "PMSolution")
      .def_readonly("inspection", &PMSolution::inspection)
      .def_readonly("plan", &PMSolution::plan)
      .def_readonly("cost", &PMSolution::cost)
      .def("__repr__", [](const PMSolution& s) {
        return "PMSolution(inspection=" + std::to_string(s.inspection) +
               ", cost=" + format_money(s.cost) + ")";
      });

  m.def("candidate_times", &candidate_times, py::arg("schedule"));
  m.def("is_chained", &is_chained, py::arg("plan"));
  m.def("chained_plan", &chained_plan, py::arg("schedule"), py::arg("t"),
        py::arg("at_deadline"));
  m.def("total_cost", &total_cost, py::arg("model"), py::arg("schedule"),
        py::arg("t"), py::arg("plan"));
  m.def("epoch_totals", &epoch_totals, py::arg("schedule"), py::arg("t"),
        py::arg("plan"));

  py::class_<PlanSearch>(m, "PlanSearch")
      .def_readonly("best", &PlanSearch::best)
      .def_readonly("evaluations", &PlanSearch::evaluations);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("per_candidate", &SweepResult::per_candidate)
      .def_readonly("best", &SweepResult::best)
      .def_readonly("evaluations", &SweepResult::evaluations);
  py::class_<TreeSearch>(m, "TreeSearch")
      .def_readonly("best", &TreeSearch::best)
      .def_readonly("leaves", &TreeSearch::leaves)
      .def_readonly("leaf_evaluations", &TreeSearch::leaf_evaluations);
  py::class_<TreeReport>(m, "TreeReport")
      .def_readonly("per_candidate", &TreeReport::per_candidate)
      .def_readonly("best", &TreeReport::best)
      .def_readonly("evaluations", &TreeReport::evaluations);

  m.def("best_plan_exhaustive", &best_plan_exhaustive, py::arg("model"),
        py::arg("schedule"), py::arg("t"));
  m.def("best_plan_unrestricted", &best_plan_unrestricted, py::arg("model"),
        py::arg("schedule"), py::arg("t"));
  m.def("simplified_solve", &simplified_solve, py::arg("model"),
        py::arg("schedule"));
  m.def("comprehensive_solve", &comprehensive_solve, py::arg("model"),
        py::arg("schedule"), py::arg("budget") = kDefaultWorkBudget);
  m.def("tree_search", &tree_search, py::arg("model"), py::arg("schedule"),
        py::arg("t"));
  m.def("tree_solve", &tree_solve, py::arg("model"), py::arg("schedule"));

  py::class_<BipInstance>(m, "BipInstance")
      .def_readonly("a", &BipInstance::a)
      .def_readonly("b", &BipInstance::b)
      .def_readonly("alpha", &BipInstance::alpha);
  m.def("make_bip", &make_bip, py::arg("schedule"), py::arg("a"), py::arg("b"));
  m.def("bip_check_feasible", &check_feasible, py::arg("schedule"),
        py::arg("instance"));
  m.def("bip_objective", &objective, py::arg("model"), py::arg("schedule"),
        py::arg("instance"));
  m.def("bip_decode", &decode, py::arg("schedule"), py::arg("instance"));
  m.def("bip_window_consistent", &window_consistent, py::arg("schedule"),
        py::arg("instance"));
  m.def("bip_encode", &encode, py::arg("schedule"), py::arg("t"),
        py::arg("plan"));

  py::class_<Instance>(m, "Instance")
      .def_readonly("model", &Instance::model)
      .def_readonly("schedule", &Instance::schedule)
      .def_readonly("name", &Instance::name);
  m.def("parse_instance", &parse_instance, py::arg("path"));

  py::enum_<Algorithm>(m, "Algorithm")
      .value("tree", Algorithm::tree)
      .value("simplified", Algorithm::simplified)
      .value("comprehensive", Algorithm::comprehensive);

  py::class_<ReportRow>(m, "ReportRow")
      .def_readonly("inspection", &ReportRow::inspection)
      .def_readonly("plan", &ReportRow::plan)
      .def_readonly("cost", &ReportRow::cost)
      .def_readonly("optimal", &ReportRow::optimal);
  py::class_<DecisionReport>(m, "DecisionReport")
      .def_readonly("instance", &DecisionReport::instance)
      .def_readonly("algorithm", &DecisionReport::algorithm)
      .def_readonly("rows", &DecisionReport::rows)
      .def_readonly("best_inspection", &DecisionReport::best_inspection)
      .def_readonly("best_cost", &DecisionReport::best_cost)
      .def_readonly("evaluations", &DecisionReport::evaluations);
  m.def("run_solver", &run_solver, py::arg("instance"), py::arg("algorithm"),
        py::arg("budget") = kDefaultWorkBudget);
  m.def("render_table", &render_table, py::arg("report"), py::arg("instance"));
  m.def("render_csv", &render_csv, py::arg("report"), py::arg("instance"));
  m.def("render_json", &render_json, py::arg("report"), py::arg("instance"));
  m.def("format_money", &format_money, py::arg("value"));
  m.def("format_plan", &format_plan, py::arg("schedule"), py::arg("t"),
        py::arg("plan"));
}
