#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lkgraph/classify.hpp"
#include "lkgraph/errors.hpp"
#include "lkgraph/linking.hpp"
#include "lkgraph/moves.hpp"
#include "lkgraph/sgd.hpp"
#include "lkgraph/smith.hpp"

namespace py = pybind11;

namespace {

using namespace lkgraph;

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

/// Accepts a list of equal-length rows; `cols` disambiguates empty row lists.
IntMatrix matrix_from_py(const py::sequence& rows, std::optional<std::size_t> cols) {
  const std::size_t r = rows.size();
  const std::size_t c = cols ? *cols : (r == 0 ? 0 : py::len(rows[0]));
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = rows[i];
    if (row.size() != c) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::dict verdict_to_py(const Verdict& v) {
  py::dict out;
  out["result"] = std::string(to_string(v.result));
  out["pairing"] = std::string(to_string(v.pairing));
  out["obstruction"] = v.obstruction.empty() ? py::object(py::none()) : py::object(py::str(v.obstruction));
  out["invariants"] = py::make_tuple(to_py(v.first.chain()), to_py(v.second.chain()));
  out[v.handlebody ? "genera" : "ranks"] = v.ranks;
  out["summary"] = v.summary();
  return out;
}

}  // namespace

PYBIND11_MODULE(_lkgraph, m) {
  m.doc() = "Linking-matrix invariants and neighborhood-homotopy classification of 2-component spatial graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  py::class_<Diagram>(m, "Diagram")
      .def(py::init<>())
      .def_static("parse", &parse_sgd, py::arg("text"))
      .def("to_sgd", &serialize_sgd)
      .def_property_readonly("vertices",
                             [](const Diagram& d) { return std::vector<std::string>(d.vertices.begin(), d.vertices.end()); })
      .def_property_readonly("edges",
                             [](const Diagram& d) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& [id, e] : d.edges) out.emplace_back(id, e.tail, e.head);
                               return out;
                             })
      .def_property_readonly("crossings",
                             [](const Diagram& d) {
                               py::list out;
                               for (const auto& [id, c] : d.crossings) {
                                 out.append(py::make_tuple(id, py::make_tuple(c.over.edge, c.over.passage),
                                                           py::make_tuple(c.under.edge, c.under.passage), c.sign));
                               }
                               return out;
                             })
      .def("component_count", [](const Diagram& d) { return components(d).size(); })
      .def("rank", [](const Diagram& d, std::size_t k) { return rank(d, k); }, py::arg("component"))
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram " + std::to_string(d.vertices.size()) + " vertices, " + std::to_string(d.edges.size()) +
               " edges, " + std::to_string(d.crossings.size()) + " crossings>";
      });

  m.def("parse_sgd", &parse_sgd, py::arg("text"));
  m.def("serialize_sgd", &serialize_sgd, py::arg("diagram"));
  m.def(
      "validate",
      [](const Diagram& d, bool two_components) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& v : validate(d, two_components ? ComponentRequirement::Two : ComponentRequirement::Any)) {
          out.emplace_back(std::string(to_string(v.kind)), v.entity, v.message);
        }
        return out;
      },
      py::arg("diagram"), py::arg("two_components") = false);

  m.def("linking_matrix", [](const Diagram& d) { return to_py(linking_matrix(d).entries); }, py::arg("diagram"));
  m.def("over_under_consistent", &over_under_consistent, py::arg("diagram"));
  m.def(
      "lk_invariant", [](const Diagram& d) { return to_py(lk_invariant(d).chain()); }, py::arg("diagram"),
      "Divisor chain of the linking matrix; [] means the invariant is 0.");

  m.def(
      "smith_normal_form",
      [](const py::sequence& rows, std::optional<std::size_t> cols) {
        const auto cert = smith_normal_form(matrix_from_py(rows, cols));
        py::dict out;
        out["U"] = to_py(cert.U);
        out["D"] = to_py(cert.D);
        out["V"] = to_py(cert.V);
        out["divisors"] = to_py(cert.divisors);
        return out;
      },
      py::arg("matrix"), py::arg("cols") = py::none());
  m.def(
      "divisors_via_minors",
      [](const py::sequence& rows, std::optional<std::size_t> cols) {
        return to_py(divisors_via_minors(matrix_from_py(rows, cols)));
      },
      py::arg("matrix"), py::arg("cols") = py::none());

  m.def("canonical_diagram", &canonical_diagram, py::arg("m"), py::arg("n"), py::arg("divisors") = std::vector<std::int64_t>{});
  m.def("crossing_change", &crossing_change, py::arg("diagram"), py::arg("crossing"));
  m.def("clasp", &clasp, py::arg("diagram"), py::arg("e"), py::arg("pos_e"), py::arg("f"), py::arg("pos_f"),
        py::arg("eps") = 1);
  m.def("contract_edge", &contract_edge, py::arg("diagram"), py::arg("edge"));
  m.def(
      "random_homotopy_walk",
      [](const Diagram& d, std::size_t steps, std::uint64_t seed) {
        auto walk = random_homotopy_walk(d, steps, seed);
        std::vector<std::string> moves;
        for (const auto& mv : walk.moves) moves.push_back(format_move(mv));
        return py::make_tuple(walk.diagram, moves);
      },
      py::arg("diagram"), py::arg("steps"), py::arg("seed"));

  m.def(
      "classify",
      [](const Diagram& a, const Diagram& b, bool ordered, bool handlebody) {
        Verdict v = handlebody ? handlebody_mode(a, b) : classify(a, b, ordered);
        return verdict_to_py(v);
      },
      py::arg("first"), py::arg("second"), py::arg("ordered") = false, py::arg("handlebody") = false);
}
