#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fractal_tutte/bipoly.hpp"
#include "fractal_tutte/cli.hpp"
#include "fractal_tutte/errors.hpp"
#include "fractal_tutte/invariants.hpp"
#include "fractal_tutte/lattice.hpp"
#include "fractal_tutte/oracle.hpp"
#include "fractal_tutte/recursion.hpp"

#include <sstream>

namespace py = pybind11;
using namespace fractal_tutte;

namespace {

py::int_ to_py_int(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(value).c_str(), nullptr, 10));
}

BigInt to_bigint(const py::handle& value) { return parse_bigint(py::str(value).cast<std::string>()); }

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(value.get_num()), to_py_int(value.get_den()));
}

// Accepts int, fractions.Fraction (anything with numerator/denominator) or "p/q".
Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    Rational r(to_bigint(value.attr("numerator")), to_bigint(value.attr("denominator")));
    if (r.get_den() == 0) throw ParseError("zero denominator");
    r.canonicalize();
    return r;
  }
  throw py::type_error("expected int, Fraction or 'p/q' string");
}

py::list terms_list(const BiPoly& poly) {
  py::list out;
  for (const auto& t : poly.terms()) out.append(py::make_tuple(t.x, t.y, to_py_int(t.coeff)));
  return out;
}

BiPoly poly_from_terms(const py::iterable& terms) {
  std::vector<Term> out;
  for (const auto& item : terms) {
    auto tuple = item.cast<py::tuple>();
    out.push_back(Term{tuple[0].cast<std::uint32_t>(), tuple[1].cast<std::uint32_t>(), to_bigint(tuple[2])});
  }
  return BiPoly::from_terms(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Tutte polynomials of self-similar lattices";

  static py::exception<Error> base_error(m, "FractalTutteError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base_error.ptr());
  py::register_exception<DomainError>(m, "DomainError", base_error.ptr());
  py::register_exception<NotDivisible>(m, "NotDivisible", base_error.ptr());

  py::enum_<LatticeFamily>(m, "LatticeFamily")
      .value("Fractal", LatticeFamily::Fractal)
      .value("Flower22", LatticeFamily::Flower22)
      .value("Flower13", LatticeFamily::Flower13);
  m.def("parse_family", [](const std::string& name) { return parse_family(name); });

  py::class_<BiPoly>(m, "BiPoly")
      .def(py::init<>())
      .def(py::init(&poly_from_terms), py::arg("terms"), "Build from (x_power, y_power, coeff) tuples.")
      .def_static("x", &BiPoly::x)
      .def_static("y", &BiPoly::y)
      .def_static("constant", [](const py::int_& c) { return BiPoly::constant(to_bigint(c)); })
      .def_static("from_json", [](const std::string& text) { return poly_from_json(text); })
      .def("terms", &terms_list)
      .def("coeff", [](const BiPoly& p, std::uint32_t i, std::uint32_t j) { return to_py_int(p.coeff(i, j)); })
      .def_property_readonly("degree_x", &BiPoly::degree_x)
      .def_property_readonly("degree_y", &BiPoly::degree_y)
      .def("is_zero", &BiPoly::is_zero)
      .def("__len__", &BiPoly::size)
      .def("evaluate", [](const BiPoly& p, const py::object& x, const py::object& y) {
        return to_fraction(evaluate(p, to_rational(x), to_rational(y)));
      })
      .def("diagonal", [](const BiPoly& p) { return diagonal(p); })
      .def("divide_by_x_minus_1", [](const BiPoly& p) { return divide_by_x_minus_1(p); })
      .def("to_json", [](const BiPoly& p) { return to_json(p); })
      .def("__add__", [](const BiPoly& a, const BiPoly& b) { return add(a, b); })
      .def("__sub__", [](const BiPoly& a, const BiPoly& b) { return sub(a, b); })
      .def("__mul__", [](const BiPoly& a, const BiPoly& b) { return mul(a, b); })
      .def("__neg__", [](const BiPoly& a) { return negate(a); })
      .def("__pow__", [](const BiPoly& a, unsigned k) { return pow(a, k); })
      .def("__eq__", [](const BiPoly& a, const BiPoly& b) { return a == b; })
      .def("__str__", [](const BiPoly& p) { return to_string(p); })
      .def("__repr__", [](const BiPoly& p) { return "BiPoly(" + to_string(p) + ")"; });

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](std::uint32_t vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                       std::uint32_t special_x, std::uint32_t special_y) {
             std::vector<Edge> list;
             for (auto [a, b] : edges) list.push_back(Edge{a, b});
             return Multigraph(vertices, std::move(list), special_x, special_y);
           }),
           py::arg("vertex_count"), py::arg("edges"), py::arg("special_x") = 0, py::arg("special_y") = 1)
      .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); })
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("special_x", &Multigraph::special_x)
      .def_property_readonly("special_y", &Multigraph::special_y)
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.a, e.b);
                               return out;
                             })
      .def("to_edge_list", [](const Multigraph& g) { return to_edge_list(g); })
      .def("degree_sequence", [](const Multigraph& g) { return degree_sequence(g); })
      .def("component_count", [](const Multigraph& g) { return component_count(g); });

  m.def("build_lattice", &build_lattice, py::arg("family"), py::arg("n"));
  m.def("lattice_counts", [](LatticeFamily family, unsigned long n) {
    auto counts = lattice_counts(family, n);
    return py::make_tuple(to_py_int(counts.vertices), to_py_int(counts.edges));
  });

  m.def("tutte_deletion_contraction", &tutte_deletion_contraction, py::call_guard<py::gil_scoped_release>());
  m.def("tutte_subgraph_expansion", &tutte_subgraph_expansion, py::call_guard<py::gil_scoped_release>());
  m.def("split_tutte", [](const Multigraph& g) {
    auto split = split_tutte(g);
    return py::make_tuple(split.connected, split.separated);
  });
  m.def("count_spanning_trees_bruteforce",
        [](const Multigraph& g) { return to_py_int(count_spanning_trees_bruteforce(g)); });

  m.def("tutte_pair",
        [](LatticeFamily family, unsigned n, unsigned cap) {
          auto pair = tutte_pair(family, n, cap);
          return py::make_tuple(pair.t1, pair.cofactor);
        },
        py::arg("family"), py::arg("n"), py::arg("symbolic_cap") = kDefaultSymbolicCap);
  m.def("tutte_symbolic", &tutte_symbolic, py::arg("family"), py::arg("n"),
        py::arg("symbolic_cap") = kDefaultSymbolicCap, py::call_guard<py::gil_scoped_release>());
  m.def("tutte_eval",
        [](LatticeFamily family, unsigned n, const py::object& x, const py::object& y) {
          return to_fraction(tutte_eval(family, n, to_rational(x), to_rational(y)));
        },
        py::arg("family"), py::arg("n"), py::arg("x"), py::arg("y"));

  m.def("spanning_trees_closed",
        [](LatticeFamily family, unsigned n) { return to_py_int(spanning_trees_closed(family, n)); });
  m.def("acyclic_root_connected", [](unsigned n) { return to_py_int(acyclic_root_connected(n)); });
  m.def("indegree_sequences_strong", [](unsigned n) { return to_py_int(indegree_sequences_strong(n)); });
  m.def("diagonal_closed", [](unsigned n) { return diagonal_closed(n); });
  m.def("bicycle_dimension", [](unsigned long n) { return to_py_int(bicycle_dimension(n)); });
  m.def("growth_constant", [](LatticeFamily family, unsigned n_max) {
    auto growth = growth_constant(family, n_max);
    py::dict out;
    out["exact"] = growth.exact;
    out["decimal"] = growth.decimal;
    out["sequence"] = growth.sequence;
    return out;
  });

  m.def("potts_partition",
        [](std::uint64_t vertices, std::uint64_t components, const py::object& t_value, const py::object& q,
           const py::object& v) {
          return to_fraction(
              potts_partition(vertices, components, to_rational(t_value), PottsParams{to_rational(q), to_rational(v)}));
        },
        py::arg("vertex_count"), py::arg("component_count"), py::arg("t_value"), py::arg("q"), py::arg("v"));
  m.def("potts_direct",
        [](const Multigraph& g, const py::object& q, const py::object& v) {
          return to_fraction(potts_direct(g, PottsParams{to_rational(q), to_rational(v)}));
        },
        py::arg("graph"), py::arg("q"), py::arg("v"));
  m.def("potts_lattice",
        [](LatticeFamily family, unsigned n, const py::object& q, const py::object& v) {
          return to_fraction(potts_lattice(family, n, PottsParams{to_rational(q), to_rational(v)}));
        },
        py::arg("family"), py::arg("n"), py::arg("q"), py::arg("v"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv{"fractal-tutte"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int status = run_cli(argv, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
