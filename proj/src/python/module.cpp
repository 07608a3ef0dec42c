// Python bindings for the main operations: Chern calculus on bundle
// expressions, Bott cohomology, Riemann-Roch, screening, and the
// classification suites. Exact values cross the boundary as Python ints
// and fractions.Fraction.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggb/classify.hpp"
#include "ggb/cohomology.hpp"

namespace py = pybind11;

namespace {

py::object py_int(const ggb::Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object py_frac(const ggb::Rat& v) {
  return py::module_::import("fractions")
      .attr("Fraction")(py_int(ggb::numerator(v)), py_int(ggb::denominator(v)));
}

py::list class_list(const ggb::ChernData& c) {
  py::list out;
  for (int i = 1; i <= c.ambient; ++i) out.append(py_int(c.c(i)));
  return out;
}

py::dict chern_dict(const ggb::ChernData& c) {
  py::dict d;
  d["ambient"] = c.ambient;
  d["rank"] = c.rank;
  d["classes"] = class_list(c);
  d["total"] = c.total.str("t");
  return d;
}

ggb::ChernData make_chern(int n, int rank, const std::vector<long>& classes) {
  return ggb::ChernData::from_classes(n, rank, classes);
}

py::list report_rows(const ggb::Report& report) {
  py::list rows;
  for (const auto& r : report.rows) {
    py::dict d;
    d["id"] = r.id;
    d["check"] = r.check;
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    rows.append(d);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(ggbundles, m) {
  m.doc() =
      "Exact Chern-class, cohomology and Riemann-Roch invariants of vector "
      "bundles on projective space";

  py::register_exception<ggb::Error>(m, "GgbError");

  m.def(
      "parse",
      [](const std::string& text) { return ggb::to_string(ggb::parse(text)); },
      py::arg("text"), "Parse a bundle expression; returns the canonical form");

  m.def(
      "rank",
      [](const std::string& text, int n) {
        return ggb::rank(ggb::parse(text), n);
      },
      py::arg("expr"), py::arg("n"));

  m.def(
      "chern",
      [](const std::string& text, int n) {
        return chern_dict(ggb::chern(text, n));
      },
      py::arg("expr"), py::arg("n"),
      "Rank and total Chern class of a bundle expression on P^n");

  m.def(
      "bott",
      [](int n, int p, long k, int q) { return py_int(ggb::bott(n, p, k, q)); },
      py::arg("n"), py::arg("p"), py::arg("k"), py::arg("q"),
      "h^q(P^n, Omega^p(k))");

  m.def("serre_duality_check", &ggb::serre_duality_check, py::arg("n"),
        py::arg("p"), py::arg("k"), py::arg("q"));

  m.def(
      "cohomology",
      [](const std::string& text, int n, long j) {
        auto table = ggb::cohomology_table(ggb::parse(text), n, j);
        py::list h;
        for (const auto& v : table.h) h.append(py_int(v));
        return h;
      },
      py::arg("expr"), py::arg("n"), py::arg("twist") = 0,
      "h^0..h^n of expr(twist)");

  m.def(
      "euler_char",
      [](const std::string& text, int n) {
        return py_frac(ggb::euler_char(ggb::chern(text, n), n));
      },
      py::arg("expr"), py::arg("n"));

  m.def(
      "euler_char_chern",
      [](int n, int rank, const std::vector<long>& classes) {
        return py_frac(ggb::euler_char(make_chern(n, rank, classes), n));
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"));

  m.def(
      "hilbert_polynomial",
      [](int n, int rank, const std::vector<long>& classes) {
        auto p = ggb::hilbert_polynomial(make_chern(n, rank, classes), n);
        py::list coeffs;
        for (const auto& c : p.coeffs) coeffs.append(py_frac(c));
        return coeffs;
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"),
      "Coefficients of chi(E(j)) by ascending power of j");

  m.def(
      "schwarzenberger_check",
      [](int n, int rank, const std::vector<long>& classes) {
        auto r = ggb::schwarzenberger_check(make_chern(n, rank, classes), n);
        py::dict d;
        d["pass"] = r.pass;
        if (!r.pass) {
          d["witness_twist"] = r.witness_twist;
          d["witness_chi"] = py_frac(r.witness_value);
        }
        return d;
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"));

  m.def(
      "gg_necessary",
      [](int n, int rank, const std::vector<long>& classes) {
        auto r = ggb::gg_necessary(make_chern(n, rank, classes), n);
        py::dict d;
        d["pass"] = r.pass();
        py::list v;
        for (const auto& [cond, witness] : r.violations)
          v.append(py::make_tuple(cond, witness));
        d["violations"] = v;
        return d;
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"));

  m.def(
      "second_reduction",
      [](int n, int rank, const std::vector<long>& classes, int h0) {
        return chern_dict(
            ggb::second_reduction(make_chern(n, rank, classes), n, h0));
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"), py::arg("h0"));

  m.def(
      "twist_chern",
      [](int n, int rank, const std::vector<long>& classes, long t) {
        return chern_dict(ggb::twist_chern(make_chern(n, rank, classes), t));
      },
      py::arg("n"), py::arg("rank"), py::arg("classes"), py::arg("t"));

  m.def(
      "verify_catalog",
      [](int n) { return report_rows(ggb::verify_catalog(n)); },
      py::arg("n"));

  m.def(
      "enumerate_candidates",
      [](int n, long c2_max) {
        py::list out;
        for (const auto& c : ggb::enumerate_candidates(n, c2_max)) {
          py::dict d;
          d["expr"] = c.expr;
          d["rank"] = c.data.rank;
          d["classes"] = class_list(c.data);
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("c2_max"));

  m.def(
      "p1_splittings",
      [](int k) {
        py::list out;
        for (const auto& s : ggb::p1_splittings(k))
          out.append(py::make_tuple(s.type, s.h0));
        return out;
      },
      py::arg("k"));

  m.def("verify_claims",
        [] { return report_rows(ggb::verify_claims()); });
}
