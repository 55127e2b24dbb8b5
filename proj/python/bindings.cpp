#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "warpdeg/analysis.hpp"
#include "warpdeg/codecs.hpp"
#include "warpdeg/error.hpp"
#include "warpdeg/generators.hpp"

namespace py = pybind11;
using namespace warpdeg;

namespace {

py::dict report_dict(const Report& r) {
  py::dict d;
  d["crossings"] = r.crossings;
  d["d"] = r.d;
  d["d_reversed"] = r.d_reversed;
  d["span"] = r.span;
  d["alternating"] = r.alternating;
  d["slack"] = r.slack;
  return d;
}

py::tuple pair_tuple(const DegreePair& p) { return py::make_tuple(p.lo, p.hi); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Warping degrees of oriented knot diagrams";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  py::class_<Diagram>(m, "Diagram")
      .def(py::init<>())
      .def_static("from_gauss", &parse_gauss, py::arg("text"))
      .def_static("from_dt", [](const std::vector<int>& code) { return dt_to_diagram(DTCode{code}); },
                  py::arg("code"))
      .def_property_readonly("crossings", &Diagram::crossing_count)
      .def("__len__", &Diagram::length)
      .def("__str__", &format_gauss)
      .def("__repr__", [](const Diagram& d) { return "Diagram('" + format_gauss(d) + "')"; })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
      .def("__hash__", [](const Diagram& d) { return py::hash(py::str(format_gauss(d))); });

  m.def("parse_gauss", &parse_gauss, py::arg("text"));
  m.def("format_gauss", &format_gauss, py::arg("diagram"));
  m.def("parse_dt", [](std::string_view text) { return parse_dt(text).entries; }, py::arg("text"));
  m.def("dt_to_diagram", [](const std::vector<int>& code) { return dt_to_diagram(DTCode{code}); },
        py::arg("code"));
  m.def("diagram_to_dt",
        [](const Diagram& d, std::size_t gap) { return diagram_to_dt(d, BasePoint{gap}).entries; },
        py::arg("diagram"), py::arg("gap") = 0);

  m.def("crossing_count", py::overload_cast<const Diagram&>(&crossing_count));
  m.def("reverse", &reverse);
  m.def("mirror", &mirror);
  m.def("canonicalize", [](const Diagram& d) { return warpdeg::canonicalize(d); });
  m.def("is_alternating", &is_alternating);
  m.def("warping_degree_at",
        [](const Diagram& d, std::size_t gap) { return warping_degree_at(d, BasePoint{gap}); },
        py::arg("diagram"), py::arg("gap"));
  m.def("warping_profile", [](const Diagram& d) { return warping_profile(d).values; });
  m.def("warping_degree", &warping_degree);
  m.def("span", [](const Diagram& d) { return warpdeg::span(d); });
  m.def("arc_labels", [](const Diagram& d, std::size_t gap) {
    const auto a = arc_labels(d, BasePoint{gap});
    py::list triples;
    for (const auto& t : a.crossings) triples.append(py::make_tuple(t.over, t.under_in, t.under_out));
    return py::make_tuple(a.arc_of_symbol, triples);
  }, py::arg("diagram"), py::arg("gap"));
  m.def("cutting_number",
        [](const Diagram& d, std::size_t gap, CrossingId p) {
          return cutting_number(d, BasePoint{gap}, p);
        },
        py::arg("diagram"), py::arg("gap"), py::arg("crossing"));

  m.def("report", [](const Diagram& d) { return report_dict(make_report(d)); });
  m.def("report_json", [](const Diagram& d) { return emit_report(make_report(d)); });
  m.def("theorem_check", [](const Diagram& d) { return report_dict(theorem_check(d)); });
  m.def("degree_pair", [](const Diagram& d) { return pair_tuple(degree_pair(d)); });
  m.def("alternating_minimizer_check", &alternating_minimizer_check);

  m.def("braid_closure",
        [](std::size_t strands, const std::vector<int>& letters) {
          return braid_closure(BraidWord{strands, letters});
        },
        py::arg("strands"), py::arg("letters"));
  m.def("torus_diagram", &torus_diagram, py::arg("p"), py::arg("q"));
  m.def("enumerate_words", [](std::size_t n) { return enumerate_words(n); }, py::arg("n"));
  m.def("canonical_word_count", &canonical_word_count, py::arg("n"));
  m.def("random_word", &random_word, py::arg("n"), py::arg("seed"));

  m.def("lemma_suite", [](std::size_t n_max, std::size_t jobs) {
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = lemma_suite(n_max, jobs);
    }
    py::dict out;
    out["words_checked"] = r.words_checked;
    out["words_per_n"] = r.words_per_n;
    py::dict props;
    for (const auto& p : r.properties) props[py::str(p.name)] = py::make_tuple(p.checked, p.failed);
    out["properties"] = props;
    py::list ces;
    for (const auto& c : r.counterexamples) ces.append(py::make_tuple(c.property, c.word));
    out["counterexamples"] = ces;
    out["ok"] = r.ok();
    return out;
  }, py::arg("n_max"), py::arg("jobs") = 1);

  m.def("reproduce_table", [](const std::string& path) {
    const auto result = reproduce_table(load_records(path));
    py::list rows;
    for (const auto& row : result.rows) {
      py::dict d;
      d["name"] = row.record.name;
      d["crossings"] = row.record.crossings;
      d["expected"] = pair_tuple(row.record.expected);
      d["computed"] = pair_tuple(row.computed);
      d["alternating"] = row.record.alternating;
      d["match"] = row.pair_match;
      d["sum_ok"] = row.sum_ok;
      rows.append(d);
    }
    return rows;
  }, py::arg("path"));

  m.def("e_upper_bound", &e_upper_bound, py::arg("diagrams"));
  m.def("e_torus", [](std::uint32_t p, std::uint32_t q) {
    const auto e = e_torus(p, q);
    return py::make_tuple(e.e, e.gap);
  }, py::arg("p"), py::arg("q"));
}
