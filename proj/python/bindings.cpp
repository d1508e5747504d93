#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "f1zeta/catalog.hpp"
#include "f1zeta/cli.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/limit.hpp"
#include "f1zeta/oracle.hpp"
#include "f1zeta/weyl.hpp"
#include "f1zeta/zeta.hpp"

namespace py = pybind11;
using namespace f1zeta;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& v) { return BigInt(py::str(v).cast<std::string>()); }

py::object to_fraction(const BigRational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(v)), to_py(denominator(v)));
}

BigRational from_rational(const py::handle& v) {
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator"))
    return BigRational(from_py(v.attr("numerator")), from_py(v.attr("denominator")));
  throw py::type_error("expected an int or fractions.Fraction");
}

py::list coeffs_to_py(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPolynomial poly_from_py(const py::iterable& coeffs) {
  std::vector<BigInt> c;
  for (auto item : coeffs) c.push_back(from_py(item));
  return IntPolynomial(std::move(c));
}

SchemeDescriptor descriptor_from(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return parse(v.cast<std::string>());
  return v.cast<SchemeDescriptor>();
}

py::dict fe_to_py(const FunctionalEquationReport& r) {
  py::dict d;
  d["center"] = r.center;
  d["sign_factor"] = r.sign_factor;
  d["exponent_flip"] = r.exponent_flip;
  d["holds"] = r.holds;
  if (r.witness) {
    py::dict w;
    w["s0"] = to_fraction(r.witness->s0);
    w["lhs"] = to_fraction(r.witness->lhs);
    w["rhs"] = to_fraction(r.witness->rhs);
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::dict weyl_to_py(const WeylGroupData& w) {
  py::dict d;
  d["semisimple_rank"] = w.semisimple_rank;
  d["num_positive_roots"] = w.num_positive_roots;
  d["length_histogram"] = w.length_histogram;
  d["group_order"] = to_py(w.group_order);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting polynomials, F1-zeta functions and their functional equations";

  static py::exception<Error> base_error(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base_error);
  py::register_exception<InvalidRank>(m, "InvalidRank", base_error);
  py::register_exception<TooLarge>(m, "TooLarge", base_error);
  py::register_exception<NotAGroup>(m, "NotAGroup", base_error);
  py::register_exception<NotSmoothProjective>(m, "NotSmoothProjective", base_error);
  py::register_exception<PoleAt>(m, "PoleAt", base_error);
  py::register_exception<TooLargeInstance>(m, "TooLargeInstance", base_error);
  py::register_exception<DivergentParameters>(m, "DivergentParameters", base_error);

  py::class_<SchemeDescriptor>(m, "SchemeDescriptor")
      .def_readonly("dimension", &SchemeDescriptor::dimension)
      .def_readonly("is_smooth_projective", &SchemeDescriptor::is_smooth_projective)
      .def("is_group", [](const SchemeDescriptor& d) { return as_reductive_group(d).has_value(); })
      .def("__str__", &SchemeDescriptor::to_string)
      .def("__repr__", [](const SchemeDescriptor& d) { return "SchemeDescriptor('" + d.to_string() + "')"; })
      .def("__eq__", [](const SchemeDescriptor& a, const SchemeDescriptor& b) { return a == b; });

  py::class_<SignedZeta>(m, "SignedZeta")
      .def(py::init([](int sign, const std::vector<std::pair<std::int64_t, py::int_>>& factors) {
             SignedZeta::Factors f;
             for (const auto& [root, e] : factors) f[root] += from_py(e);
             return SignedZeta(sign, std::move(f));
           }),
           py::arg("sign"), py::arg("factors"))
      .def_property_readonly("sign", &SignedZeta::sign)
      .def_property_readonly("factors",
                             [](const SignedZeta& z) {
                               py::list out;
                               for (const auto& [root, e] : z.factors()) out.append(py::make_tuple(root, to_py(e)));
                               return out;
                             })
      .def("render", [](const SignedZeta& z, const std::string& fmt) {
             return render(z, fmt == "latex" ? RenderFormat::Latex : RenderFormat::Plain);
           }, py::arg("format") = "plain")
      .def("__eq__", [](const SignedZeta& a, const SignedZeta& b) { return a == b; })
      .def("__repr__", [](const SignedZeta& z) { return "SignedZeta(" + render(z, RenderFormat::Plain) + ")"; });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));

  m.def("counting_polynomial", [](const py::handle& d) { return coeffs_to_py(counting_polynomial(descriptor_from(d))); },
        py::arg("scheme"), "Coefficients of N(q), lowest degree first.");
  m.def("euler_characteristic", [](const py::iterable& c) { return to_py(euler_characteristic(poly_from_py(c))); });

  m.def("zeta_from_counting", [](const py::iterable& c) { return zeta_from_counting(poly_from_py(c)); });
  m.def("reflect", &reflect, py::arg("zeta"), py::arg("center"));
  m.def("power", &power, py::arg("zeta"), py::arg("eps"));
  m.def("evaluate", [](const SignedZeta& z, const py::handle& s0) { return to_fraction(evaluate(z, from_rational(s0))); },
        py::arg("zeta"), py::arg("s0"));

  m.def("check_fe_projective", [](const py::handle& d) {
    const ProjectiveReport r = check_fe_projective(descriptor_from(d));
    py::dict out = fe_to_py(r.fe);
    out["chi"] = to_py(r.chi);
    out["n"] = r.n;
    out["middle_betti"] = to_py(r.middle_betti);
    out["predicts_negative_sign"] = r.predicts_negative_sign;
    out["sign_rule_holds"] = r.sign_rule_holds;
    return out;
  });
  m.def("check_lemma_group", [](const py::handle& d) {
    const LemmaReport r = check_lemma_group(descriptor_from(d));
    py::dict out;
    out["r"] = r.shape.rank_r;
    out["N"] = r.shape.num_positive_roots_N;
    out["d"] = r.shape.dimension_d;
    out["low_coefficients_vanish"] = r.low_coefficients_vanish;
    out["symmetry_holds"] = r.symmetry_holds;
    out["holds"] = r.holds;
    return out;
  });
  m.def("check_fe_group", [](const py::handle& d, std::int64_t center) {
    return fe_to_py(check_fe_group(descriptor_from(d), center));
  }, py::arg("scheme"), py::arg("center"));
  m.def("find_reflection_centers", [](const SignedZeta& z) {
    py::list out;
    for (const auto& c : find_reflection_centers(z)) out.append(py::make_tuple(c.center, c.exponent_flip, c.sign_factor));
    return out;
  });

  m.def("weyl_enumerate", [](const std::string& family, int rank) {
    if (family.size() != 1) throw InvalidRank("family must be a single letter");
    return weyl_to_py(weyl_enumerate(RootSystemSpec::single(family_from_letter(family[0]), rank)));
  }, py::arg("family"), py::arg("rank"));
  m.def("poincare_by_degrees", [](const std::string& family, int rank) {
    if (family.size() != 1) throw InvalidRank("family must be a single letter");
    return coeffs_to_py(poincare_by_degrees(RootSystemSpec::single(family_from_letter(family[0]), rank)));
  }, py::arg("family"), py::arg("rank"));

  m.def("count_points", [](const py::handle& d, int p) { return to_py(count_points(descriptor_from(d), p)); },
        py::arg("scheme"), py::arg("p"));
  m.def("verify_counting", [](const py::handle& d, const std::vector<int>& primes) {
    py::list out;
    for (const auto& row : verify_counting(descriptor_from(d), primes)) {
      py::dict r;
      r["p"] = row.p;
      r["predicted"] = to_py(row.predicted);
      r["counted"] = row.counted ? py::object(to_py(*row.counted)) : py::object(py::none());
      r["status"] = row.status == OracleStatus::Match ? "ok" : row.status == OracleStatus::Mismatch ? "mismatch" : "skipped";
      out.append(r);
    }
    return out;
  }, py::arg("scheme"), py::arg("primes"));

  m.def("zeta_q_series", [](const py::iterable& c, double q, double s0, int terms) {
    return zeta_q_series(poly_from_py(c), HighReal(q), HighReal(s0), terms).convert_to<double>();
  }, py::arg("coeffs"), py::arg("q"), py::arg("s0"), py::arg("terms") = 200);
  m.def("zeta_q_closed", [](const py::iterable& c, double q, double s0) {
    return zeta_q_closed(poly_from_py(c), HighReal(q), HighReal(s0)).convert_to<double>();
  }, py::arg("coeffs"), py::arg("q"), py::arg("s0"));
  m.def("soule_limit_check", [](const py::handle& d, const std::string& s0, int steps) {
    const LimitReport r = soule_limit_check(descriptor_from(d), LimitProbe::decimal(HighReal(s0), steps));
    py::dict out;
    out["chi"] = r.chi;
    out["target"] = to_fraction(r.target);
    py::list errors;
    for (const auto& st : r.steps) errors.append(st.relative_error.convert_to<double>());
    out["relative_errors"] = errors;
    out["holds"] = r.holds;
    return out;
  }, py::arg("scheme"), py::arg("s0"), py::arg("steps") = 6);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "f1zeta");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line interface; returns (exit_code, stdout, stderr).");
}
