#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "martial/cache_store.hpp"
#include "martial/cli.hpp"
#include "martial/coalgebra.hpp"
#include "martial/errors.hpp"
#include "martial/genus.hpp"
#include "martial/qstats.hpp"
#include "martial/schubert.hpp"
#include "martial/verify.hpp"

namespace py = pybind11;
using namespace martial;

namespace {

py::object fraction(const Rational& r) {
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(r.get_str());
}

py::dict vectorDict(const SchubertVector& v) {
  py::dict out;
  for (const auto& [sigma, c] : v) out[py::cast(sigma)] = fraction(c);
  return out;
}

py::dict distributionDict(const StatDistribution& d) {
  py::dict out;
  for (const auto& [key, count] : d) out[py::make_tuple(key.first, key.second)] = count;
  return out;
}


py::object loadsJson(const nlohmann::json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

}  // namespace

PYBIND11_MODULE(_martial, m) {
  m.doc() = "Schubert symbols, nil Hecke actions, genera and q-statistics";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<>())
      .def_static("parse", &Permutation::parse, py::arg("text"), py::arg("offset") = 1)
      .def_static("simple", &Permutation::simple)
      .def_static("transposition", &Permutation::transposition)
      .def_static("from_word", [](const Word& w) { return Permutation::fromWord(w); })
      .def_property_readonly("length", &Permutation::length)
      .def_property_readonly("lo", &Permutation::lo)
      .def_property_readonly("hi", &Permutation::hi)
      .def_property_readonly("is_identity", &Permutation::isIdentity)
      .def("__call__", &Permutation::operator())
      .def("inverse", &Permutation::inverse)
      .def("shifted", &Permutation::shifted)
      .def("right_descents", &Permutation::rightDescents)
      .def("left_descents", &Permutation::leftDescents)
      .def("letters", &Permutation::letters)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", &Permutation::hash)
      .def("__str__", &Permutation::toString)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.toString() + "')"; });

  m.def("reduced_words", [](const Permutation& p) { return reducedWords(p); });
  m.def("comaj", [](const Word& w) { return comaj(w); });

  m.def("schubert_polynomial", [](const Permutation& p) { return schubertPolynomial(p).toString(); });
  m.def("structure_constants", [](const Permutation& pi, const Permutation& rho) {
    return vectorDict(structureConstants(pi, rho));
  });
  m.def("monk_product", [](int k, const Permutation& pi) { return vectorDict(monkProduct(k, pi)); });

  m.def("coproduct", [](const Permutation& p) {
    py::dict out;
    for (const auto& [pair, c] : coproduct(SchubertVector::basis(p)))
      out[py::make_tuple(pair.first, pair.second)] = fraction(c);
    return out;
  });
  m.def("stanley_coefficients", [](const Permutation& p) {
    py::dict out;
    for (const auto& [lambda, c] : stanleyCoefficients(p)) out[py::tuple(py::cast(lambda.parts))] = c.get_si();
    return out;
  });
  m.def("lr_coefficients", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    py::dict out;
    for (const auto& [nu, c] : lrCoefficients(Partition(lambda), Partition(mu))) out[py::tuple(py::cast(nu.parts))] = c.get_si();
    return out;
  });

  m.def("klyachko_genus", [](const Permutation& p) { return klyachkoGenus(p).toString(); });
  m.def("affine_linear_genus", [](const Permutation& p) { return affineLinearGenus(p).toString(); });
  m.def("q_klyachko_genus", [](const Permutation& p) {
    const auto v = qKlyachkoGenus(p);
    return py::make_tuple(v.numerator.toString(), v.denomLength);
  });
  m.def(
      "component_evaluate",
      [](const Permutation& p, std::optional<int> i, std::optional<int> j) {
        if (i.has_value() != j.has_value()) throw ValidationError("i and j go together");
        ComponentSpec spec = AffineLinearComponent{};
        if (i) spec = TwoSlopeComponent{*i, *j};
        return componentEvaluate(spec, p).toString();
      },
      py::arg("p"), py::arg("i") = py::none(), py::arg("j") = py::none());
  m.def("exp_triangle", [](const Permutation& p) { return expTriangle(p).toString(); });

  m.def(
      "q_nenashev_distributions",
      [](const Permutation& pi, const Permutation& rho, std::optional<int> bars) {
        const auto d = qNenashevDistributions(pi, rho, bars);
        py::dict out;
        out["lhs"] = distributionDict(d.lhs);
        out["rhs"] = distributionDict(d.rhs);
        out["holds"] = d.holds();
        return out;
      },
      py::arg("pi"), py::arg("rho"), py::arg("bars") = py::none());
  m.def("distribution_table_csv", [](const Permutation& pi, const Permutation& rho, int bars) {
    return distributionTable(pi, rho, bars).toCsv();
  });
  m.def(
      "rectification_witness",
      [](const Permutation& pi, const Permutation& rho, std::optional<int> bars) {
        return loadsJson(rectificationWitness(pi, rho, bars).toJson());
      },
      py::arg("pi"), py::arg("rho"), py::arg("bars") = py::none());
  m.def("equidistribution_sn", &equidistributionSn);
  m.def("garsia_gessel_check", &garsiaGesselCheck);

  m.def("suites", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : suites()) out.emplace_back(s.name, s.description);
    return out;
  });
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> maxLength, std::optional<std::string> window, int jobs) {
        SuiteOptions options;
        options.maxLength = maxLength;
        if (window) options.window = parseWindow(*window);
        options.jobs = jobs;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = runSuite(suite, options);
        }
        return loadsJson(report.toJson());
      },
      py::arg("suite"), py::arg("max_length") = py::none(), py::arg("window") = py::none(), py::arg("jobs") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
  m.def("load_caches", [](const std::string& dir) { return loadCaches(dir); });
  m.def("save_caches", [](const std::string& dir) { saveCaches(dir); });
}
