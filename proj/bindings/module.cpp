#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "effrank/bootstrap.hpp"
#include "effrank/dataset.hpp"
#include "effrank/efficiency.hpp"
#include "effrank/errors.hpp"
#include "effrank/pareto.hpp"
#include "effrank/ranking.hpp"
#include "effrank/report.hpp"
#include "effrank/simplex.hpp"

namespace py = pybind11;
using namespace effrank;

PYBIND11_MODULE(_effrank, m) {
  m.doc() = "Rank competing setups by stochastic multi-dimensional relative efficiency";

  py::register_exception<Error>(m, "EffrankError");

  py::enum_<Direction>(m, "Direction")
      .value("Input", Direction::Input)
      .value("Output", Direction::Output);

  py::enum_<FrontierForm>(m, "FrontierForm")
      .value("Convex", FrontierForm::Convex)
      .value("Affine", FrontierForm::Affine);

  py::enum_<DominanceRelation>(m, "DominanceRelation")
      .value("FirstDominates", DominanceRelation::FirstDominates)
      .value("SecondDominates", DominanceRelation::SecondDominates)
      .value("Incomparable", DominanceRelation::Incomparable);

  py::class_<MetricSpec>(m, "MetricSpec")
      .def(py::init<std::string, Direction>(), py::arg("name"), py::arg("direction"))
      .def_readwrite("name", &MetricSpec::name)
      .def_readwrite("direction", &MetricSpec::direction);

  py::class_<MeasurementRecord>(m, "MeasurementRecord")
      .def(py::init<>())
      .def_readwrite("setup", &MeasurementRecord::setup)
      .def_readwrite("repeat", &MeasurementRecord::repeat)
      .def_readwrite("values", &MeasurementRecord::values);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<>())
      .def_readwrite("metrics", &Dataset::metrics)
      .def_readwrite("records", &Dataset::records)
      .def("setups", &Dataset::setups)
      .def("repeat_count", &Dataset::repeat_count);

  py::class_<SetupSummary>(m, "SetupSummary")
      .def(py::init<>())
      .def_readwrite("setup", &SetupSummary::setup)
      .def_readwrite("mean", &SetupSummary::mean)
      .def_readwrite("stddev", &SetupSummary::stddev);

  py::class_<SummaryTable>(m, "SummaryTable")
      .def(py::init<>())
      .def_readwrite("metrics", &SummaryTable::metrics)
      .def_readwrite("setups", &SummaryTable::setups);

  py::class_<Point>(m, "Point")
      .def(py::init<std::string, std::vector<double>, std::vector<double>>(),
           py::arg("setup"), py::arg("inputs"), py::arg("outputs"))
      .def_readwrite("setup", &Point::setup)
      .def_readwrite("inputs", &Point::inputs)
      .def_readwrite("outputs", &Point::outputs);

  py::class_<EfficiencyResult>(m, "EfficiencyResult")
      .def_readonly("setup", &EfficiencyResult::setup)
      .def_readonly("theta", &EfficiencyResult::theta)
      .def_readonly("peer_weights", &EfficiencyResult::peer_weights)
      .def_readonly("form", &EfficiencyResult::form);

  py::class_<BoxplotStats>(m, "BoxplotStats")
      .def_readonly("min", &BoxplotStats::min)
      .def_readonly("whisker_low", &BoxplotStats::whisker_low)
      .def_readonly("q1", &BoxplotStats::q1)
      .def_readonly("median", &BoxplotStats::median)
      .def_readonly("q3", &BoxplotStats::q3)
      .def_readonly("whisker_high", &BoxplotStats::whisker_high)
      .def_readonly("max", &BoxplotStats::max);

  py::class_<BootstrapConfig>(m, "BootstrapConfig")
      .def(py::init<>())
      .def_readwrite("replicates", &BootstrapConfig::replicates)
      .def_readwrite("seed", &BootstrapConfig::seed)
      .def_readwrite("form", &BootstrapConfig::form)
      .def_readwrite("positivity_floor", &BootstrapConfig::positivity_floor)
      .def_readwrite("threads", &BootstrapConfig::threads);

  py::class_<BootstrapDistribution>(m, "BootstrapDistribution")
      .def_readonly("setup", &BootstrapDistribution::setup)
      .def_readonly("samples", &BootstrapDistribution::samples)
      .def_readonly("stats", &BootstrapDistribution::stats);

  py::class_<DominanceGraph>(m, "DominanceGraph")
      .def_readonly("nodes", &DominanceGraph::nodes)
      .def_readonly("edges", &DominanceGraph::edges)
      .def_readonly("reduced_edges", &DominanceGraph::reduced_edges);

  py::class_<RankEntry>(m, "RankEntry")
      .def_readonly("setup", &RankEntry::setup)
      .def_readonly("theta", &RankEntry::theta)
      .def_readonly("median", &RankEntry::median)
      .def_readonly("stats", &RankEntry::stats)
      .def_readonly("on_frontier", &RankEntry::on_frontier)
      .def_readonly("dominates", &RankEntry::dominates)
      .def_readonly("dominated_by", &RankEntry::dominated_by);

  m.def("parse_dataset_csv", [](const std::string& text) {
    std::istringstream in(text);
    return parse_dataset_csv(in);
  }, py::arg("text"));
  m.def("parse_dataset_json", [](const std::string& text) {
    std::istringstream in(text);
    return parse_dataset_json(in);
  }, py::arg("text"));
  m.def("load_dataset", &load_dataset, py::arg("path"));
  m.def("serialize_dataset_csv", &serialize_dataset_csv, py::arg("dataset"));
  m.def("summarize", &summarize, py::arg("dataset"));

  m.def("dominates", &dominates, py::arg("a"), py::arg("b"));
  m.def("pareto_frontier", &pareto_frontier, py::arg("points"));

  m.def("efficiency_scores",
        py::overload_cast<const std::vector<Point>&, FrontierForm>(&efficiency_scores),
        py::arg("points"), py::arg("form") = FrontierForm::Convex);
  m.def("efficiency_scores",
        py::overload_cast<const SummaryTable&, FrontierForm>(&efficiency_scores),
        py::arg("table"), py::arg("form") = FrontierForm::Convex);
  m.def("summary_point", &summary_point, py::arg("metrics"), py::arg("summary"));

  m.def("sample_setup", &sample_setup, py::arg("metrics"), py::arg("summary"),
        py::arg("seed"), py::arg("replicate"), py::arg("setup_index"),
        py::arg("positivity_floor") = 1e-9);
  m.def("bootstrap_efficiencies", &bootstrap_efficiencies, py::arg("table"),
        py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("boxplot_stats", &boxplot_stats, py::arg("samples"));

  m.def("stochastic_dominance", &stochastic_dominance, py::arg("a"), py::arg("b"),
        py::arg("tolerance") = 1e-12);
  m.def("dominance_graph", &dominance_graph, py::arg("dists"),
        py::arg("tolerance") = 1e-12);
  m.def("rank_report", &rank_report, py::arg("results"), py::arg("dists"),
        py::arg("graph"), py::arg("frontier"));

  m.def("render_dot", &render_dot, py::arg("graph"));
}
