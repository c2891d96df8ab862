// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Matrices cross the boundary as lists of rows; the kind
// ("dcm" or "cdcm") travels as a separate string argument.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <random>
#include <sstream>

#include "dcm/dcm.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<dcm::Count>>;

dcm::Orientation orientation(bool directed) {
  return directed ? dcm::Orientation::directed : dcm::Orientation::undirected;
}

dcm::AnyMatrix any_matrix(const Rows& rows, const std::string& kind) {
  if (kind == "dcm") return dcm::DcMatrix(rows);
  if (kind == "cdcm") return dcm::CdcMatrix(rows);
  throw dcm::DomainError("unknown matrix kind '" + kind + "', expected dcm or cdcm");
}

std::vector<dcm::Count> counts(const std::vector<std::int64_t>& values) {
  std::vector<dcm::Count> out;
  for (auto v : values) {
    if (v < 0) throw dcm::DomainError("negative entry " + std::to_string(v));
    out.push_back(static_cast<dcm::Count>(v));
  }
  return out;
}

py::object distance_or_none(dcm::Distance d) {
  if (d == dcm::kInfinite) return py::none();
  return py::int_(d);
}

}  // namespace

PYBIND11_MODULE(_dcmkit, m) {
  m.doc() = "Distance-count matrices of graphs";

  auto error = py::register_exception<dcm::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<dcm::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<dcm::ModeError>(m, "ModeError", error.ptr());
  py::register_exception<dcm::ParseError>(m, "ParseError", error.ptr());

  py::class_<dcm::Graph>(m, "Graph")
      .def(py::init([](std::size_t n, bool directed) { return dcm::Graph(n, orientation(directed)); }),
           py::arg("n"), py::arg("directed") = true)
      .def_static("parse", py::overload_cast<const std::string&>(&dcm::parse_graph), py::arg("text"))
      .def("add_arc", &dcm::Graph::add_arc, py::arg("tail"), py::arg("head"))
      .def("has_arc", &dcm::Graph::has_arc, py::arg("tail"), py::arg("head"))
      .def("__len__", &dcm::Graph::size)
      .def_property_readonly("directed", &dcm::Graph::is_directed)
      .def_property_readonly("arc_count", &dcm::Graph::arc_count)
      .def("successors", [](const dcm::Graph& g, dcm::Node x) {
        auto s = g.successors(x);
        return std::vector<dcm::Node>(s.begin(), s.end());
      })
      .def("predecessors", [](const dcm::Graph& g, dcm::Node x) {
        auto s = g.predecessors(x);
        return std::vector<dcm::Node>(s.begin(), s.end());
      })
      .def("in_degree", &dcm::Graph::in_degree)
      .def("out_degree", &dcm::Graph::out_degree)
      .def("arcs", &dcm::Graph::arcs)
      .def("edges", &dcm::Graph::edges)
      .def("__eq__", [](const dcm::Graph& a, const dcm::Graph& b) { return a == b; })
      .def("__str__", [](const dcm::Graph& g) { return dcm::to_string(g); })
      .def("__repr__", [](const dcm::Graph& g) {
        return std::string("<Graph ") + (g.is_directed() ? "directed" : "undirected") +
               " n=" + std::to_string(g.size()) + " arcs=" + std::to_string(g.arc_count()) + ">";
      });

  m.def("distances_to", [](const dcm::Graph& g, dcm::Node target) {
    py::list out;
    for (auto d : dcm::distances_to(g, target).dist) out.append(distance_or_none(d));
    return out;
  }, py::arg("g"), py::arg("target"), "d(x, target) for every x; None when unreachable");
  m.def("eccentricity", [](const dcm::Graph& g, dcm::Node i) {
    return distance_or_none(dcm::eccentricity(g, i));
  });
  m.def("diameter", [](const dcm::Graph& g) { return distance_or_none(dcm::diameter(g)); });
  m.def("is_strongly_connected", &dcm::is_strongly_connected);
  m.def("graph_power", &dcm::graph_power, py::arg("g"), py::arg("k"));
  m.def("connected_components", &dcm::connected_components);
  m.def("random_graph", [](std::size_t n, double p, bool directed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return dcm::random_graph(n, p, orientation(directed), rng);
  }, py::arg("n"), py::arg("p"), py::arg("directed") = true, py::arg("seed") = 1);

  m.def("dcm_of", [](const dcm::Graph& g) { return dcm::dcm_of(g).rows(); });
  m.def("cdcm_of", [](const dcm::Graph& g) { return dcm::cdcm_of(g).rows(); });
  m.def("dcm_to_cdcm", [](const Rows& r) { return dcm::dcm_to_cdcm(dcm::DcMatrix(r)).rows(); });
  m.def("cdcm_to_dcm", [](const Rows& r) { return dcm::cdcm_to_dcm(dcm::CdcMatrix(r)).rows(); });
  m.def("canonicalize", [](const Rows& r) { return dcm::canonicalize(dcm::DcMatrix(r)).rows(); },
        "Rows sorted lexicographically");
  m.def("goodness", [](const std::vector<std::int64_t>& a) {
    const auto v = dcm::goodness(a);
    py::dict out;
    out["good"] = v.is_good;
    out["very_good"] = v.is_very_good;
    out["plateau_value"] = v.plateau_value;
    out["plateau_start"] = v.plateau_start;
    return out;
  });

  m.def("erdos_gallai", [](const std::vector<std::int64_t>& d) {
    return dcm::erdos_gallai_check(dcm::DegreeSequence::sorted(counts(d)));
  });
  m.def("havel_hakimi", [](const std::vector<std::int64_t>& d) {
    return dcm::havel_hakimi(dcm::DegreeSequence::sorted(counts(d))).graph;
  }, "A realization, or None when the sequence is not graphical");
  m.def("indegree_realize", [](const std::vector<std::int64_t>& d) {
    return dcm::indegree_realize(dcm::DegreeSequence::sorted(counts(d)));
  });
  m.def("realize_good_sequence", [](const std::vector<std::int64_t>& a) {
    return dcm::realize_good_sequence(dcm::GoodSequence(counts(a)));
  });

  py::class_<dcm::ScreenFailure>(m, "ScreenFailure")
      .def_property_readonly("rule", [](const dcm::ScreenFailure& f) { return dcm::rule_name(f.rule); })
      .def_readonly("row", &dcm::ScreenFailure::row)
      .def_readonly("column", &dcm::ScreenFailure::column)
      .def_readonly("detail", &dcm::ScreenFailure::detail);
  py::class_<dcm::ScreenReport>(m, "ScreenReport")
      .def_property_readonly("passed", &dcm::ScreenReport::passed)
      .def_readonly("failures", &dcm::ScreenReport::failures)
      .def_readonly("in_degrees", &dcm::ScreenReport::in_degrees)
      .def_readonly("budget_exhausted_rows", &dcm::ScreenReport::budget_exhausted_rows)
      .def("__str__", [](const dcm::ScreenReport& r) { return dcm::render_text(r); });
  m.def("screen", [](const Rows& rows, const std::string& kind, bool directed, bool exact,
                     bool require_strong, std::uint64_t subset_budget) {
    dcm::ScreenConfig cfg;
    cfg.orientation = orientation(directed);
    cfg.require_strong = require_strong;
    cfg.bounds.mode = exact ? dcm::BoundMode::exact : dcm::BoundMode::relaxed;
    cfg.bounds.subset_budget = subset_budget;
    return dcm::screen(any_matrix(rows, kind), cfg);
  }, py::arg("rows"), py::arg("kind") = "dcm", py::arg("directed") = true,
     py::arg("exact") = false, py::arg("require_strong") = false,
     py::arg("subset_budget") = 1'000'000);

  m.def("validate_instance", [](const std::vector<std::int64_t>& a, const std::string& level,
                                std::int64_t gap) {
    dcm::ValidationLevel lv = dcm::ValidationLevel::lenient();
    if (level == "tpp") lv = dcm::ValidationLevel::tpp();
    else if (level == "hardened") lv = dcm::ValidationLevel::hardened(gap);
    else if (level != "lenient") throw dcm::DomainError("unknown level '" + level + "'");
    const auto v = dcm::validate_instance(a, lv);
    return py::make_tuple(v.ok, v.rule, v.detail);
  }, py::arg("values"), py::arg("level") = "lenient", py::arg("gap") = 3,
     "(ok, rule, detail); values must already be nonincreasing");
  m.def("solve_tpp", [](const std::vector<std::int64_t>& a, std::size_t max_items) {
    const auto out = dcm::solve_tpp(dcm::TppInstance(a), dcm::TppLimits{max_items});
    const char* status = out.status == dcm::TppStatus::positive   ? "positive"
                         : out.status == dcm::TppStatus::negative ? "negative"
                                                                  : "unknown";
    std::vector<std::array<std::size_t, 3>> triples;
    if (out.solution) triples = out.solution->triples;
    return py::make_tuple(status, triples);
  }, py::arg("values"), py::arg("max_items") = 24,
     "(status, triples); triples index the nonincreasingly sorted instance");
  m.def("sorted_instance", [](const std::vector<std::int64_t>& a) {
    const dcm::TppInstance inst(a);
    return std::vector<std::int64_t>(inst.values().begin(), inst.values().end());
  });
  m.def("build_matrix", [](const std::vector<std::int64_t>& a) {
    return dcm::build_matrix(dcm::TppInstance(a)).rows();
  });
  m.def("build_gadget", [](const std::vector<std::int64_t>& a,
                           const std::vector<std::array<std::size_t, 3>>& triples) {
    auto gadget = dcm::build_gadget(dcm::TppInstance(a), dcm::TppSolution{triples});
    std::vector<std::string> labels;
    for (const auto& role : gadget.layout.roles) labels.push_back(role.label());
    return py::make_tuple(std::move(gadget.graph), labels);
  }, py::arg("values"), py::arg("triples"), "(graph, node labels)");

  py::class_<dcm::RecognitionOutcome>(m, "Recognition")
      .def_property_readonly("verdict", [](const dcm::RecognitionOutcome& o) {
        return dcm::verdict_name(o.verdict);
      })
      .def_readonly("witness", &dcm::RecognitionOutcome::witness)
      .def_readonly("reason", &dcm::RecognitionOutcome::reason)
      .def_property_readonly("explored", [](const dcm::RecognitionOutcome& o) { return o.stats.explored; })
      .def_property_readonly("elapsed_ms", [](const dcm::RecognitionOutcome& o) { return o.stats.elapsed_ms; });
  m.def("recognize", [](const Rows& rows, const std::string& kind, bool directed, bool permute,
                        std::size_t max_n, double timeout_s, std::uint64_t max_nodes) {
    const auto matrix = any_matrix(rows, kind);
    dcm::SearchLimits limits;
    limits.max_n = max_n;
    limits.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_s * 1000));
    limits.node_budget = max_nodes;
    limits.policy = permute ? dcm::MatchPolicy::up_to_permutation : dcm::MatchPolicy::fixed_rows;
    py::gil_scoped_release release;
    return dcm::recognize(matrix, orientation(directed), limits);
  }, py::arg("rows"), py::arg("kind") = "dcm", py::arg("directed") = true,
     py::arg("permute") = false, py::arg("max_n") = 10, py::arg("timeout_s") = 60.0,
     py::arg("max_nodes") = 500'000'000);
  m.def("verify_witness", [](const dcm::Graph& g, const Rows& rows, const std::string& kind,
                             bool permute) {
    return dcm::verify_witness(g, any_matrix(rows, kind),
                               permute ? dcm::MatchPolicy::up_to_permutation
                                       : dcm::MatchPolicy::fixed_rows);
  }, py::arg("g"), py::arg("rows"), py::arg("kind") = "dcm", py::arg("permute") = false);
}
