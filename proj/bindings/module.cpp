// Python bindings for the Brandt semigroup library.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brandt/census.hpp"

namespace py = pybind11;
using namespace brandt;

namespace {

// Exact big integers cross into python as int, via their decimal form.
py::int_ to_py_int(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (obj == nullptr) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::int_>(obj);
}

py::object to_fraction(const Rational& r) {
  const py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(num(r)), to_py_int(den(r)));
}

py::dict rows_dict(const CensusTable& table) {
  py::dict out;
  for (const auto& [solutions, equations] : table.rows) {
    out[py::int_(solutions)] = to_py_int(equations);
  }
  return out;
}

py::list coeff_list(const Polynomial& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) {
    out.append(to_py_int(p.coeff(k)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations over Brandt semigroups: canonical terms, "
            "equation solving, and solution-count censuses.";

  py::class_<Element>(m, "Element")
      .def_static("zero", &Element::zero)
      .def_static("pair", &Element::pair, py::arg("i"), py::arg("j"))
      .def_readonly("i", &Element::i)
      .def_readonly("j", &Element::j)
      .def("is_zero", &Element::is_zero)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](Element e) { return (static_cast<long>(e.i) << 16) ^ e.j; })
      .def("__str__", [](Element e) { return to_string(e); })
      .def("__repr__", [](Element e) { return "Element(" + to_string(e) + ")"; });

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Semigroup::n)
      .def("size", &Semigroup::size)
      .def("elements", &Semigroup::elements)
      .def("contains", &Semigroup::contains)
      .def("index_of", &Semigroup::index_of)
      .def("__repr__", [](const Semigroup& ctx) {
        return "Semigroup(" + std::to_string(ctx.n()) + ")";
      });

  m.def("multiply", &multiply, py::arg("ctx"), py::arg("a"), py::arg("b"));
  m.def("parse_element", &parse_element, py::arg("ctx"), py::arg("text"));

  py::enum_<TermClass>(m, "TermClass")
      .value("CONSTANT", TermClass::constant)
      .value("VARIABLE", TermClass::variable)
      .value("SQUARE", TermClass::square)
      .value("LEFT_MUL", TermClass::left_mul)
      .value("RIGHT_MUL", TermClass::right_mul)
      .value("SANDWICH", TermClass::sandwich);

  py::class_<Term>(m, "Term")
      .def(py::self == py::self)
      .def("__len__", [](const Term& t) { return t.factors.size(); })
      .def("factors",
           [](const Term& t) {
             // Variables come back as None, constants as Element.
             py::list out;
             for (const Factor& f : t.factors) {
               if (f.is_var) {
                 out.append(py::none());
               } else {
                 out.append(py::cast(f.constant));
               }
             }
             return out;
           })
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__",
           [](const Term& t) { return "Term(" + to_string(t) + ")"; });

  py::class_<CanonicalTerm>(m, "CanonicalTerm")
      .def_static("constant", &CanonicalTerm::constant, py::arg("b"))
      .def_static("variable", &CanonicalTerm::variable)
      .def_static("square", &CanonicalTerm::square)
      .def_static("left_mul", &CanonicalTerm::left_mul, py::arg("b"))
      .def_static("right_mul", &CanonicalTerm::right_mul, py::arg("b"))
      .def_static("sandwich", &CanonicalTerm::sandwich, py::arg("b"),
                  py::arg("d"))
      .def_readonly("cls", &CanonicalTerm::cls)
      .def_readonly("b", &CanonicalTerm::b)
      .def_readonly("d", &CanonicalTerm::d)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const CanonicalTerm& t) {
             return py::hash(py::str(to_string(t)));
           })
      .def("__str__", [](const CanonicalTerm& t) { return to_string(t); })
      .def("__repr__", [](const CanonicalTerm& t) {
        return "CanonicalTerm(" + to_string(t) + ")";
      });

  m.def("parse_term", &parse_term, py::arg("ctx"), py::arg("text"));
  m.def("evaluate",
        py::overload_cast<const Semigroup&, const Term&, Element>(&evaluate),
        py::arg("ctx"), py::arg("term"), py::arg("x"));
  m.def("evaluate",
        py::overload_cast<const Semigroup&, const CanonicalTerm&, Element>(
            &evaluate),
        py::arg("ctx"), py::arg("term"), py::arg("x"));
  m.def("normalize", &normalize, py::arg("ctx"), py::arg("term"));
  m.def("enumerate_canonical", &enumerate_canonical, py::arg("ctx"));
  m.def("value_table", &value_table, py::arg("ctx"), py::arg("term"));
  m.def("to_term", &to_term, py::arg("term"));

  py::class_<Equation>(m, "Equation")
      .def(py::init<CanonicalTerm, CanonicalTerm>(), py::arg("lhs"),
           py::arg("rhs"))
      .def_readonly("lhs", &Equation::lhs)
      .def_readonly("rhs", &Equation::rhs)
      .def(py::self == py::self)
      .def("__str__", [](const Equation& eq) { return to_string(eq); })
      .def("__repr__", [](const Equation& eq) {
        return "Equation(" + to_string(eq) + ")";
      });

  m.def("parse_equation", &parse_equation, py::arg("ctx"), py::arg("text"));
  m.def("classify", &classify, py::arg("equation"));
  m.def("solve_brute", &solve_brute, py::arg("ctx"), py::arg("equation"));
  m.def("count_solutions_symbolic", &count_solutions_symbolic, py::arg("ctx"),
        py::arg("equation"));

  py::enum_<CensusMode>(m, "CensusMode")
      .value("BRUTE", CensusMode::brute)
      .value("SYMBOLIC", CensusMode::symbolic)
      .value("FORMULAS", CensusMode::formulas);

  py::class_<CensusTable>(m, "CensusTable")
      .def_readonly("n", &CensusTable::n)
      .def_readonly("mode", &CensusTable::mode)
      .def("rows", &rows_dict)
      .def("total", [](const CensusTable& t) { return to_py_int(t.total()); })
      .def("unsolvable",
           [](const CensusTable& t) { return to_py_int(t.unsolvable()); })
      .def("solution_sum",
           [](const CensusTable& t) { return to_py_int(t.solution_sum()); })
      .def("to_csv", [](const CensusTable& t) { return to_csv(t); })
      .def("to_json", [](const CensusTable& t) { return to_json(t); })
      .def("__repr__", [](const CensusTable& t) {
        return "CensusTable(n=" + std::to_string(t.n) + ", mode=" +
               to_string(t.mode) + ", buckets=" +
               std::to_string(t.rows.size()) + ")";
      });

  m.def("census", &census, py::arg("ctx"), py::arg("mode"),
        py::arg("threads") = 0, py::arg("brute_cap") = kDefaultBruteCap,
        py::call_guard<py::gil_scoped_release>());
  m.def("type_census", &type_census, py::arg("ctx"), py::arg("type"),
        py::arg("mode"), py::arg("brute_cap") = kDefaultBruteCap);
  m.def("census_from_formulas", &census_from_formulas, py::arg("n"));

  m.def("average_solutions",
        [](const CensusTable& t) { return to_fraction(average_solutions(t)); },
        py::arg("table"));
  m.def("average_formula",
        [](int n) { return to_fraction(average_formula(n)); }, py::arg("n"));
  m.def("unsolvable_count",
        [](int n) { return to_py_int(unsolvable_count(n)); }, py::arg("n"));
  m.def("unsolvable_fraction",
        [](int n) { return to_fraction(unsolvable_fraction(n)); },
        py::arg("n"));
  m.def("canonical_count",
        [](int n) { return to_py_int(canonical_count(n)); }, py::arg("n"));
  m.def("equation_space_size",
        [](int n) { return to_py_int(equation_space_size(n)); }, py::arg("n"));

  m.def("distribution_formulas", [] {
    // (solution-count, equation-count) polynomial pairs as ascending
    // coefficient lists.
    py::list out;
    for (const DistributionRow& row : distribution_formulas()) {
      out.append(py::make_tuple(coeff_list(row.solutions),
                                coeff_list(row.equations)));
    }
    return out;
  });

  py::class_<VerifyCheck>(m, "VerifyCheck")
      .def_readonly("n", &VerifyCheck::n)
      .def_readonly("name", &VerifyCheck::name)
      .def_readonly("passed", &VerifyCheck::pass)
      .def("__repr__", [](const VerifyCheck& c) {
        return "VerifyCheck(n=" + std::to_string(c.n) + ", " + c.name + ", " +
               (c.pass ? "PASS" : "FAIL") + ")";
      });

  m.def("verify_range", &verify_range, py::arg("lo"), py::arg("hi"),
        py::arg("mode"), py::arg("threads") = 0,
        py::arg("brute_cap") = kDefaultBruteCap);
}
