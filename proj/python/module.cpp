#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgepow/ass_primes.hpp"
#include "edgepow/canonical.hpp"
#include "edgepow/compare.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"
#include "edgepow/graph_io.hpp"
#include "edgepow/report.hpp"
#include "edgepow/sbases.hpp"
#include "edgepow/socle_oracle.hpp"

namespace py = pybind11;
using namespace edgepow;

namespace {

py::object to_python(const Json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& x : j) out.append(to_python(x));
    return std::move(out);
  }
  py::dict out;
  for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
  return std::move(out);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> labels(VertexSet s) { return s.members(); }

}  // namespace

PYBIND11_MODULE(edgepow, m) {
  m.doc() = "Associated primes of powers of edge ideals of graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges", &edge_pairs)
      .def("edge_count", &Graph::edge_count)
      .def("to_text", [](const Graph& g) { return to_text(g); })
      .def("to_json", [](const Graph& g) { return to_json_string(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.n()) + ", " + std::to_string(g.edge_count()) + " edges)";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse a graph from the text or JSON format.");
  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("edge_list", [](const std::string& spec, int n) { return parse_edge_list(spec, n); }, py::arg("spec"),
        py::arg("n") = 0, "Graph from an inline edge list such as '1-2,2-3,3-1'.");
  m.def("cycle", &cycle_graph, py::arg("length"));
  m.def("canonical_hash", &canonical_hash, py::arg("graph"));
  m.def("connected_graphs", &connected_graphs, py::arg("n"), "Connected graphs on n vertices up to isomorphism.");
  m.def(
      "minimal_covers", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (VertexSet f : minimal_covers(g)) out.push_back(labels(f));
        return out;
      },
      py::arg("graph"));

  m.def(
      "associated_primes", [](const Graph& g, int t) { return to_python(to_json(associated_primes(g, t))); },
      py::arg("graph"), py::arg("t"), "Ass(I^t) as a dict with minimal and embedded primes.");
  m.def(
      "ass_infinity", [](const Graph& g) { return to_python(to_json(ass_infinity(g))); }, py::arg("graph"),
      "Stable set of associated primes with per-prime indices and astab.");
  m.def("max_ideal_in_ass", &max_ideal_in_ass, py::arg("graph"), py::arg("t"));
  m.def(
      "mu_star", [](const Graph& g) { return to_python(to_json(phi_star(g))); }, py::arg("graph"),
      "mu*, phi* and an optimal initially odd ear decomposition.");
  m.def("s_invariant", &s_invariant, py::arg("graph"));
  m.def(
      "minimal_sbases",
      [](int s, std::optional<int> n_max) { return to_python(to_json(enumerate_minimal_sbases(s, n_max))); },
      py::arg("s"), py::arg("n_max") = py::none());
  m.def(
      "socle_witness",
      [](const Graph& g, int t, std::uint64_t guard_ops) -> py::object {
        OracleOptions options;
        options.guard_ops = guard_ops;
        const auto w = oracle_max_ideal_in_ass(g, t, options);
        if (!w) return py::none();
        return py::cast(w->weights.values());
      },
      py::arg("graph"), py::arg("t"), py::arg("guard_ops") = OracleOptions{}.guard_ops,
      "Lexicographically first socle exponent vector, or None.");
  m.def(
      "compare",
      [](const std::vector<Graph>& corpus, int t_max, int jobs) {
        CompareOptions options;
        options.t_max = t_max;
        options.jobs = jobs;
        CompareSummary s;
        {
          py::gil_scoped_release release;
          s = compare_corpus(corpus, options);
        }
        py::dict out;
        out["graphs"] = s.graphs;
        out["checks"] = s.checks;
        out["mismatches"] = s.mismatches;
        out["first_mismatch"] = s.first ? py::object(py::str(describe(*s.first))) : py::none();
        return out;
      },
      py::arg("corpus"), py::arg("t_max") = 4, py::arg("jobs") = 1);
}
