#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resnet/analysis.hpp"
#include "resnet/builders.hpp"
#include "resnet/closed_forms.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"
#include "resnet/io.hpp"
#include "resnet/reduction.hpp"
#include "resnet/report_io.hpp"
#include "resnet/spectra.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; int and "p/q" strings
// are accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = resnet::parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src) || py::hasattr(src, "numerator")) {
        auto num = py::str(src.attr("numerator")).cast<std::string>();
        auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = resnet::parse_rational(num + "/" + den);
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const mpq_class& q, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(resnet::to_string(q)).release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace resnet;

py::dict diameter_dict(const DiameterReport& d) {
  py::dict out;
  out["value"] = d.value;
  out["exact_value"] = d.exact_value ? py::cast(*d.exact_value) : py::none();
  py::list pairs;
  for (const auto& [u, v] : d.pairs) pairs.append(py::make_tuple(u, v, d.labels[u], d.labels[v]));
  out["pairs"] = pairs;
  return out;
}

py::dict scan_dict(const ScanReport& r) {
  py::dict out;
  out["k"] = r.k;
  out["base"] = r.base;
  out["pair"] = py::make_tuple(r.pair_i, r.pair_j);
  out["limit"] = r.limit;
  out["mode"] = r.mode == EvalMode::exact ? "exact" : "spectral";
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict d;
    d["n"] = row.n;
    d["R_n"] = row.r;
    d["diff"] = row.diff ? py::cast(*row.diff) : py::none();
    d["abs_dev_from_limit"] = row.abs_dev ? py::cast(*row.abs_dev) : py::none();
    d["R_n_exact"] = row.r_exact ? py::cast(*row.r_exact) : py::none();
    d["diff_exact"] = row.diff_exact ? py::cast(*row.diff_exact) : py::none();
    rows.append(d);
  }
  out["rows"] = rows;
  return out;
}

EvalMode mode_of(const std::string& mode) {
  if (mode == "exact") return EvalMode::exact;
  if (mode == "spectral") return EvalMode::spectral;
  throw py::value_error("mode must be 'exact' or 'spectral'");
}

}  // namespace

PYBIND11_MODULE(_resnet, m) {
  m.doc() = "Exact and spectral effective resistance on resistor networks";

  auto base = py::register_exception<Error>(m, "ResnetError");
  py::register_exception<MalformedNetwork>(m, "MalformedNetwork", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DisconnectedNetwork>(m, "DisconnectedNetwork", base.ptr());
  py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
  py::register_exception<ReductionError>(m, "ReductionError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<ResistorNetwork>(m, "ResistorNetwork")
      .def(py::init<>())
      .def(py::init<std::size_t>(), py::arg("vertex_count"))
      .def_static("from_text", [](const std::string& text) { return parse_network(text); }, py::arg("text"))
      .def_static("from_file", [](const std::string& path) { return read_network_file(path); }, py::arg("path"))
      .def("to_text", [](const ResistorNetwork& n) { return render_network(n); })
      .def("add_vertex", &ResistorNetwork::add_vertex, py::arg("label") = "")
      .def("add_edge", &ResistorNetwork::add_edge, py::arg("u"), py::arg("v"), py::arg("r"),
           py::arg("gadget") = false)
      .def_property_readonly("vertex_count", &ResistorNetwork::vertex_count)
      .def_property_readonly("edge_count", &ResistorNetwork::edge_count)
      .def_property_readonly("labels", &ResistorNetwork::labels)
      .def_property_readonly("edges",
                             [](const ResistorNetwork& n) {
                               py::list out;
                               for (const auto& e : n.edges()) out.append(py::make_tuple(e.u, e.v, e.r, e.gadget));
                               return out;
                             })
      .def("label", &ResistorNetwork::label, py::arg("v"))
      .def("find", &ResistorNetwork::find, py::arg("label"))
      .def("degree", &ResistorNetwork::degree, py::arg("v"))
      .def("neighbors", &ResistorNetwork::neighbors, py::arg("v"))
      .def("is_connected", &ResistorNetwork::is_connected)
      .def("__eq__", [](const ResistorNetwork& a, const ResistorNetwork& b) { return a == b; })
      .def("__repr__", [](const ResistorNetwork& n) {
        return "<ResistorNetwork " + std::to_string(n.vertex_count()) + " vertices, " +
               std::to_string(n.edge_count()) + " edges>";
      });

  m.def("laplacian", [](const ResistorNetwork& n) { return build_laplacian(n).to_float(); }, py::arg("net"));

  m.def("path", &path, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("clique2", &clique2);
  m.def("empty_graph", &empty_graph, py::arg("m"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("m"), py::arg("n"));
  m.def("hypercube", &hypercube, py::arg("k"));
  m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
  m.def("cone", &cone, py::arg("g"), py::arg("m"));
  m.def("join", &join, py::arg("g"), py::arg("h"));
  m.def("ladder", &ladder, py::arg("n"));
  m.def("block_tower", &block_tower, py::arg("n"));
  m.def("fan", &fan, py::arg("n"), py::arg("m"));

  m.def(
      "resistance_exact",
      [](const ResistorNetwork& n, VertexId u, VertexId v, std::optional<VertexId> ground) {
        return resistance_exact(n, u, v, ground);
      },
      py::arg("net"), py::arg("u"), py::arg("v"), py::arg("ground") = py::none());
  m.def(
      "resistance_matrix_exact",
      [](const ResistorNetwork& n) {
        ResistanceTable t = resistance_matrix_exact(n);
        std::vector<std::vector<Rational>> out(t.size(), std::vector<Rational>(t.size()));
        for (std::size_t i = 0; i < t.size(); ++i)
          for (std::size_t j = 0; j < t.size(); ++j) out[i][j] = t(i, j);
        return out;
      },
      py::arg("net"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("values", &Spectrum::values)
      .def_readonly("vectors", &Spectrum::vectors)
      .def("__len__", &Spectrum::size)
      .def("resistance", &resistance_spectral, py::arg("u"), py::arg("v"))
      .def("orthonormality_defect", &orthonormality_defect);
  m.def("path_spectrum", &path_spectrum, py::arg("n"));
  m.def("cycle_spectrum", &cycle_spectrum, py::arg("n"));
  m.def("clique2_spectrum", &clique2_spectrum);
  m.def("hypercube_spectrum", &hypercube_spectrum, py::arg("k"));
  m.def("product_spectrum", &product_spectrum, py::arg("g"), py::arg("h"));
  m.def("generic_spectrum", [](const ResistorNetwork& n) { return generic_spectrum(build_laplacian(n)); },
        py::arg("net"));
  m.def(
      "resistance_spectral",
      [](const ResistorNetwork& n, VertexId u, VertexId v) {
        return resistance_spectral(generic_spectrum(build_laplacian(n)), u, v);
      },
      py::arg("net"), py::arg("u"), py::arg("v"));

  m.def(
      "kmn_resistance",
      [](std::size_t a, std::size_t b, const std::string& su, const std::string& sv) {
        auto side = [](const std::string& s) {
          if (s == "m") return Side::m_side;
          if (s == "n") return Side::n_side;
          throw py::value_error("side must be 'm' or 'n'");
        };
        return kmn_resistance(a, b, side(su), side(sv));
      },
      py::arg("m"), py::arg("n"), py::arg("side_u"), py::arg("side_v"));
  m.def("hypercube_diameter", &hypercube_diameter, py::arg("k"));
  m.def("ladder_endpoint_resistance", &ladder_endpoint_resistance, py::arg("n"));
  m.def("ladder_gap", &ladder_gap, py::arg("n"));
  m.def(
      "block_tower_decomposition",
      [](std::size_t n) {
        DecompositionReport r = block_tower_decomposition(n);
        py::dict out;
        out["n"] = r.n;
        out["lhs"] = r.lhs_exact;
        out["rhs"] = r.rhs_exact;
        out["residual"] = r.residual_exact;
        out["rhs_closed_form"] = r.rhs_closed_form;
        out["residual_closed_form"] = r.residual_closed_form;
        return out;
      },
      py::arg("n"));

  m.def("product_resistance", &product_resistance, py::arg("g"), py::arg("h"), py::arg("rg_uv"), py::arg("rh_xy"),
        py::arg("u"), py::arg("x"), py::arg("v"), py::arg("y"));
  m.def(
      "resistance_diameter",
      [](const ResistorNetwork& n, const std::string& mode) { return diameter_dict(resistance_diameter(n, mode_of(mode))); },
      py::arg("net"), py::arg("mode") = "exact");
  m.def(
      "conjecture_scan",
      [](std::size_t k, std::size_t n_max, std::optional<std::pair<std::size_t, std::size_t>> pair,
         const std::string& mode, std::size_t jobs, std::optional<std::size_t> budget, const std::string& format)
          -> py::object {
        ScanOptions o;
        o.k = k;
        o.n_max = n_max;
        o.pair = pair;
        o.mode = mode_of(mode);
        o.jobs = jobs;
        o.vertex_budget = budget ? *budget : vertex_budget_from_env();
        ScanReport r;
        {
          py::gil_scoped_release release;
          r = conjecture_scan(o);
        }
        if (format == "csv") return py::str(scan_to_csv(r));
        if (format == "json") return py::str(scan_to_json(r));
        return scan_dict(r);
      },
      py::arg("k"), py::arg("n_max"), py::arg("pair") = py::none(), py::arg("mode") = "exact", py::arg("jobs") = 1,
      py::arg("vertex_budget") = py::none(), py::arg("format") = "dict");

  m.def(
      "reduce",
      [](const ResistorNetwork& n, const std::vector<std::string>& terminals, bool certify, bool fan_mode) {
        ReduceOptions o;
        o.certify = certify;
        o.fan_pipeline = fan_mode;
        ReduceResult r = reduce(n, Terminals(terminals), o);
        py::dict out;
        out["fully_reduced"] = r.fully_reduced;
        out["steps"] = r.trace.steps.size();
        out["final"] = r.trace.final_network;
        out["trace_json"] = trace_to_json(r.trace);
        out["trace_text"] = trace_to_text(r.trace);
        return out;
      },
      py::arg("net"), py::arg("terminals"), py::arg("certify") = false, py::arg("fan") = false);
  m.def(
      "fan_chain_reduce",
      [](std::size_t n, std::size_t mm) {
        FanChain c = fan_chain_reduce(n, mm);
        py::dict out;
        out["chain"] = c.chain;
        out["center_to_apex"] = c.center_to_apex;
        out["tail"] = c.tail;
        out["endpoint_resistance"] = c.endpoint_resistance();
        out["apex_resistance"] = c.apex_resistance();
        out["shorter_endpoint_resistance"] = c.shorter_endpoint_resistance();
        out["penultimate_apex_arm"] = c.penultimate_apex_arm();
        return out;
      },
      py::arg("n"), py::arg("m"));
}
