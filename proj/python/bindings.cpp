#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monodeg/cli.hpp"
#include "monodeg/error.hpp"
#include "monodeg/report.hpp"

namespace py = pybind11;
using namespace monodeg;

namespace {

// big integers cross the boundary as decimal text
py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) {
  if (!PyLong_Check(h.ptr())) throw Error(ErrorCode::ParseError, "matrix and sequence entries must be int");
  return Integer(py::str(h).cast<std::string>(), 10);
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

std::vector<Integer> integers(const py::iterable& seq) {
  std::vector<Integer> out;
  for (auto h : seq) out.push_back(from_py(h));
  return out;
}

// a literal / JSON path string, or rows of ints
IntMatrix matrix(const py::object& m) {
  if (py::isinstance<py::str>(m)) return parse_matrix(m.cast<std::string>());
  std::vector<std::vector<Integer>> rows;
  for (auto r : m) rows.push_back(integers(py::reinterpret_borrow<py::iterable>(r)));
  return IntMatrix::from_rows(rows);
}

py::list rows(const IntMatrix& a) {
  py::list out;
  for (const auto& r : a.rows()) out.append(to_py(r));
  return out;
}

py::object recurrence(const std::optional<Recurrence>& r) {
  if (!r) return py::none();
  py::list coeffs;
  for (const auto& q : r->polynomial()) {
    py::object num = to_py(Integer(q.get_num())), den = to_py(Integer(q.get_den()));
    coeffs.append(py::module_::import("fractions").attr("Fraction")(num, den));
  }
  py::dict d;
  d["polynomial"] = coeffs;
  d["order"] = r->order();
  d["valid_from"] = r->valid_from;
  d["display"] = r->to_string();
  return d;
}

AnalysisOptions options(std::size_t terms, std::optional<std::size_t> max_order, std::optional<std::size_t> guard,
                        unsigned precision, bool parallel) {
  AnalysisOptions o;
  o.terms = terms;
  o.max_order = max_order;
  o.guard = guard;
  o.precision_bits = precision;
  o.parallel = parallel;
  return o;
}

std::optional<Verdict> dual_of(const IntMatrix& a, unsigned precision) {
  if (a.dim() < 2 || !is_unimodular(a)) return std::nullopt;
  return classify_dual(a, precision);
}

}  // namespace

PYBIND11_MODULE(_monodeg, m) {
  m.doc() = "Degree sequences of monomial maps, their recurrences and spectral verdicts";

  // messages start with the error code, e.g. "NOT_SQUARE: row 2 has ..."
  py::register_exception<Error>(m, "MonodegError", PyExc_ValueError);

  m.def("parse_matrix", [](const std::string& text) { return rows(parse_matrix(text)); }, py::arg("text"));
  m.def("degree", [](const py::object& a) { return to_py(degree(matrix(a))); }, py::arg("matrix"));
  m.def("det", [](const py::object& a) { return to_py(det(matrix(a))); }, py::arg("matrix"));
  m.def("char_poly", [](const py::object& a) { return to_py(char_poly(matrix(a)).coeffs()); }, py::arg("matrix"),
        "coefficients, ascending");
  m.def("degree_sequence", [](const py::object& a, std::size_t n) { return to_py(degree_sequence(matrix(a), n).terms); },
        py::arg("matrix"), py::arg("terms") = 40);
  m.def("dual_degree_sequence",
        [](const py::object& a, std::size_t n) { return to_py(dual_degree_sequence(matrix(a), n).terms); },
        py::arg("matrix"), py::arg("terms") = 40);

  m.def("berlekamp_massey", [](const py::iterable& seq) {
    const auto s = integers(seq);
    return recurrence(berlekamp_massey(std::span<const Integer>(s)));
  }, py::arg("sequence"));
  m.def("find_recurrence", [](const py::iterable& seq, std::size_t max_order, std::size_t guard) {
    const auto s = integers(seq);
    return recurrence(find_recurrence(s, max_order, guard));
  }, py::arg("sequence"), py::arg("max_order"), py::arg("guard"));
  m.def("check_candidate", [](const py::iterable& seq, const py::iterable& poly) {
    const auto s = integers(seq);
    return check_candidate(s, IntPoly(integers(poly)));
  }, py::arg("sequence"), py::arg("polynomial"), "least offset from which the monic polynomial annihilates, or None");

  // report documents come back as JSON text; the package wrapper decodes them
  m.def("analysis_json", [](const py::object& a, std::size_t terms, std::optional<std::size_t> max_order,
                            std::optional<std::size_t> guard, unsigned precision, bool parallel) {
    const IntMatrix mat = matrix(a);
    AnalysisReport r;
    {
      py::gil_scoped_release release;
      r = analyze(mat, options(terms, max_order, guard, precision, parallel));
    }
    return analysis_json(r);
  }, py::arg("matrix"), py::arg("terms") = 40, py::arg("max_order") = py::none(), py::arg("guard") = py::none(),
        py::arg("precision") = kDefaultPrecisionBits, py::arg("parallel") = false);
  m.def("verdict_json", [](const py::object& a, unsigned precision) {
    const IntMatrix mat = matrix(a);
    require_full_rank(mat);
    return verdict_json(mat, classify_d1(mat, precision), dual_of(mat, precision));
  }, py::arg("matrix"), py::arg("precision") = kDefaultPrecisionBits);
  m.def("cells_json", [](const py::object& a, std::size_t window) {
    const IntMatrix mat = matrix(a);
    return cells_json(mat, cell_trace(mat, window));
  }, py::arg("matrix"), py::arg("window") = 40);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"monodeg"};
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "returns (exit code, stdout, stderr)");

  m.attr("DEFAULT_PRECISION_BITS") = kDefaultPrecisionBits;
}
