#include "f1zeta/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "f1zeta/catalog.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/limit.hpp"
#include "f1zeta/oracle.hpp"
#include "f1zeta/weyl.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta::cli {

namespace {

using Json = nlohmann::ordered_json;

Json json_int(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string rational_text(const BigRational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string signed_unit(int v) { return v > 0 ? "+1" : "-1"; }

std::string real_text(const HighReal& v) { return v.str(12, std::ios_base::scientific); }

Json coefficients_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(json_int(c));
  return arr;
}

Json zeta_json(const SignedZeta& z) {
  Json factors = Json::array();
  for (const auto& [root, e] : z.factors()) factors.push_back(Json::array({root, json_int(e)}));
  Json out;
  out["sign"] = z.sign();
  out["factors"] = std::move(factors);
  return out;
}

// Field order: scheme, counting_polynomial, chi, dimension, zeta, then optional sections.
Json output_record(const std::string& scheme, const IntPolynomial& p, int dimension) {
  Json rec;
  rec["scheme"] = scheme;
  rec["counting_polynomial"] = coefficients_json(p);
  rec["chi"] = json_int(euler_characteristic(p));
  rec["dimension"] = dimension;
  rec["zeta"] = zeta_json(zeta_from_counting(p));
  return rec;
}

Json fe_json(const std::string& kind, const FunctionalEquationReport& r) {
  Json j;
  j["kind"] = kind;
  j["center"] = r.center;
  j["sign_factor"] = r.sign_factor;
  j["exponent_flip"] = r.exponent_flip;
  j["holds"] = r.holds;
  if (r.witness) {
    Json w;
    w["s0"] = rational_text(r.witness->s0);
    w["lhs"] = rational_text(r.witness->lhs);
    w["rhs"] = rational_text(r.witness->rhs);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string fe_line(const FunctionalEquationReport& r) {
  std::ostringstream os;
  os << (r.holds ? "holds" : "FAILS") << " (eps=" << signed_unit(r.exponent_flip)
     << ", sigma=" << signed_unit(r.sign_factor) << ")";
  if (r.witness)
    os << "; witness s0=" << rational_text(r.witness->s0) << ": lhs=" << rational_text(r.witness->lhs)
       << ", rhs=" << rational_text(r.witness->rhs);
  return os.str();
}

IntPolynomial parse_raw_poly(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    const std::string trimmed = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    const bool digits = !trimmed.empty() && trimmed.find_first_not_of("0123456789", trimmed[0] == '-' ? 1 : 0) ==
                                                 std::string::npos && trimmed != "-";
    if (!digits) throw ParseError(offset, {"integer"}, "raw polynomial: expected an integer coefficient");
    coeffs.emplace_back(trimmed);
    offset += item.size() + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

// Runs a command body and maps library errors onto exit codes.
template <class F>
int guarded(const std::string& input, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << format_parse_error(input, e.offset(), e.what()) << "\n";
    return kParseError;
  } catch (const InvalidRank& e) {
    err << "invalid descriptor: " << e.what() << "\n";
    return kInvalidDescriptor;
  } catch (const NotAGroup& e) {
    err << "invalid descriptor: " << e.what() << "\n";
    return kInvalidDescriptor;
  } catch (const NotSmoothProjective& e) {
    err << "invalid descriptor: " << e.what() << "\n";
    return kInvalidDescriptor;
  } catch (const TooLarge& e) {
    err << e.what() << "\n";
    return kResourceCap;
  } catch (const DivergentParameters& e) {
    err << "invalid numeric parameters: " << e.what() << "\n";
    return kInvalidNumeric;
  } catch (const PoleAt& e) {
    err << "invalid numeric parameters: " << e.what() << "\n";
    return kInvalidNumeric;
  }
}

struct Resolved {
  std::string text;
  IntPolynomial counting;
  int dimension = 0;
};

Resolved resolve(const std::string& scheme, const std::optional<std::string>& raw_poly) {
  if (raw_poly) {
    IntPolynomial p = parse_raw_poly(*raw_poly);
    const int dim = static_cast<int>(std::max<long>(p.degree(), 0));
    return {"raw(" + *raw_poly + ")", std::move(p), dim};
  }
  const SchemeDescriptor d = parse(scheme);
  return {scheme, counting_polynomial(d), d.dimension};
}

OutputFormat format_from(const std::string& s) {
  if (s == "latex") return OutputFormat::Latex;
  if (s == "json") return OutputFormat::Json;
  return OutputFormat::Plain;
}

}  // namespace

int cmd_zeta(const ZetaArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(args.raw_poly.value_or(args.scheme), err, [&] {
    const Resolved r = resolve(args.scheme, args.raw_poly);
    const SignedZeta z = zeta_from_counting(r.counting);
    if (args.format == OutputFormat::Json) {
      out << output_record(r.text, r.counting, r.dimension).dump(2) << "\n";
      return int{kOk};
    }
    const auto style = args.format == OutputFormat::Latex ? RenderFormat::Latex : RenderFormat::Plain;
    out << "N(q)=" << r.counting.to_string() << ", chi=" << euler_characteristic(r.counting).str()
        << ", zeta=" << render(z, style) << "\n";
    return int{kOk};
  });
}

int cmd_check_fe(const CheckFeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(args.scheme, err, [&] {
    const SchemeDescriptor d = parse(args.scheme);
    const IntPolynomial p = counting_polynomial(d);
    const SignedZeta z = zeta_from_counting(p);
    Json rec = output_record(args.scheme, p, d.dimension);
    Json checks = Json::array();
    std::ostringstream text;
    bool all_hold = true;

    text << "scheme: " << args.scheme << "\n";
    text << "N(q)=" << p.to_string() << ", chi=" << euler_characteristic(p).str() << ", n=" << d.dimension << "\n";

    if (d.is_smooth_projective) {
      const ProjectiveReport rep = check_fe_projective(d);
      all_hold = rep.fe.holds && rep.sign_rule_holds;
      Json j = fe_json("projective", rep.fe);
      j["middle_betti"] = json_int(rep.middle_betti);
      j["predicts_negative_sign"] = rep.predicts_negative_sign;
      j["sign_rule_holds"] = rep.sign_rule_holds;
      checks.push_back(std::move(j));
      text << "functional equation zeta(n-s) = (-1)^chi zeta(s) at n=" << rep.n << ": " << fe_line(rep.fe) << "\n";
      text << "sign rule (sigma=-1 iff n even and b_n odd, b_n=" << rep.middle_betti.str()
           << "): " << (rep.sign_rule_holds ? "holds" : "FAILS") << "\n";
    } else if (as_reductive_group(d)) {
      const LemmaReport lemma = check_lemma_group(d);
      const GroupShape& s = lemma.shape;
      text << "group: r=" << s.rank_r << ", N=" << s.num_positive_roots_N << ", d=" << s.dimension_d << "\n";
      text << "coefficient lemma: " << (lemma.holds ? "holds" : "FAILS") << " (a_0..a_{N-1} vanish: "
           << (lemma.low_coefficients_vanish ? "yes" : "no")
           << "; a_{d-i} = (-1)^r a_{i+N}: " << (lemma.symmetry_holds ? "yes" : "no") << ")\n";
      Json lj;
      lj["kind"] = "lemma";
      lj["low_coefficients_vanish"] = lemma.low_coefficients_vanish;
      lj["symmetry_holds"] = lemma.symmetry_holds;
      lj["holds"] = lemma.holds;
      checks.push_back(std::move(lj));
      all_hold = lemma.holds;

      const std::int64_t stated = s.rank_r + s.num_positive_roots_N;
      const FunctionalEquationReport at_stated = check_fe_group(d, stated);
      checks.push_back(fe_json("group_stated_center", at_stated));
      text << "functional equation at stated center r+N=" << stated << ": " << fe_line(at_stated) << "\n";
      all_hold = all_hold && at_stated.holds;

      if (!z.empty()) {
        const auto centers = find_reflection_centers(z);
        text << "reflection centers found: " << centers.size() << "\n";
        for (const auto& c : centers) {
          const auto rep = check_functional_equation(z, c.center, c.sign_factor, c.exponent_flip);
          checks.push_back(fe_json("group_discovered_center", rep));
          text << "  center " << c.center << (c.center == s.dimension_d + s.num_positive_roots_N ? " (= d+N)" : "")
               << ": " << fe_line(rep) << "\n";
          all_hold = all_hold && rep.holds;
        }
      }
    } else {
      throw NotSmoothProjective(d.to_string() + " is neither smooth projective nor a reductive group");
    }

    if (args.format == OutputFormat::Json) {
      rec["checks"] = std::move(checks);
      out << rec.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return int{all_hold ? kOk : kIdentityFailed};
  });
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(args.scheme, err, [&] {
    const SchemeDescriptor d = parse(args.scheme);
    const IntPolynomial p = counting_polynomial(d);
    for (int q : args.primes) {
      if (q < 2 || (args.oracle && (!is_prime(q) || q > 46'340))) {
        err << "invalid numeric parameters: field size " << q << (args.oracle ? " must be prime" : " must be >= 2")
            << "\n";
        return int{kInvalidNumeric};
      }
    }

    std::vector<OracleRow> rows;
    if (args.oracle) {
      rows = verify_counting(d, args.primes, OracleOptions{args.max_enumeration});
    } else {
      for (int q : args.primes) {
        OracleRow row;
        row.p = q;
        row.predicted = eval_int(p, q);
        rows.push_back(std::move(row));
      }
    }

    bool all_match = true;
    for (const auto& r : rows) all_match = all_match && r.status != OracleStatus::Mismatch;

    if (args.format == OutputFormat::Json) {
      Json rec = output_record(args.scheme, p, d.dimension);
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["q"] = r.p;
        j["polynomial"] = json_int(r.predicted);
        if (args.oracle) {
          j["oracle"] = r.counted ? json_int(*r.counted) : Json(nullptr);
          j["status"] = r.status == OracleStatus::Match ? "ok" : r.status == OracleStatus::Mismatch ? "mismatch" : "skipped";
        }
        arr.push_back(std::move(j));
      }
      rec["oracle"] = std::move(arr);
      out << rec.dump(2) << "\n";
    } else {
      out << "scheme: " << args.scheme << "\nN(q)=" << p.to_string() << "\n";
      out << (args.oracle ? "q\tN(q)\toracle\tstatus\n" : "q\tN(q)\n");
      for (const auto& r : rows) {
        out << r.p << "\t" << r.predicted.str();
        if (args.oracle) {
          if (r.status == OracleStatus::Skipped)
            out << "\t-\tskipped (" << r.note << ")";
          else
            out << "\t" << r.counted->str() << "\t" << (r.status == OracleStatus::Match ? "ok" : "MISMATCH");
        }
        out << "\n";
      }
    }
    return int{all_match ? kOk : kIdentityFailed};
  });
}

int cmd_weyl(const WeylArgs& args, std::ostream& out, std::ostream& err) {
  const std::string label = args.family + std::to_string(args.rank);
  return guarded(label, err, [&] {
    if (args.family.size() != 1) throw InvalidRank("type must be one of A..G");
    if (args.method != "bfs" && args.method != "degrees" && args.method != "both")
      throw InvalidRank("method must be bfs, degrees or both");
    const RootSystemSpec spec = RootSystemSpec::single(family_from_letter(args.family[0]), args.rank);

    std::optional<WeylGroupData> bfs;
    std::optional<IntPolynomial> by_degrees;
    if (args.method != "degrees") {
      try {
        bfs = weyl_enumerate(spec, args.cap);
      } catch (const TooLarge& e) {
        err << e.what() << "\nhint: rerun with --method degrees\n";
        return int{kResourceCap};
      }
    }
    if (args.method != "bfs") by_degrees = poincare_by_degrees(spec);

    const IntPolynomial poly = bfs ? poincare_polynomial(*bfs) : *by_degrees;
    const bool match = !(bfs && by_degrees) || poincare_polynomial(*bfs) == *by_degrees;
    const BigInt order = bfs ? bfs->group_order : eval_int(*by_degrees, 1);
    const long big_n = poly.degree();

    if (args.format == OutputFormat::Json) {
      Json rec = output_record("Flag(" + spec.to_string() + ")", poly, static_cast<int>(big_n));
      Json w;
      w["type"] = spec.to_string();
      w["method"] = args.method;
      w["order"] = json_int(order);
      w["num_positive_roots"] = big_n;
      w["length_histogram"] = coefficients_json(poly);
      if (bfs && by_degrees) w["match"] = match;
      rec["weyl"] = std::move(w);
      out << rec.dump(2) << "\n";
    } else {
      out << "type: " << spec.to_string() << "\n";
      out << "order: " << order.str() << "\n";
      out << "positive roots N: " << big_n << "\n";
      out << "length histogram:";
      for (const auto& c : poly.coeffs()) out << " " << c.str();
      out << "\n";
      out << "poincare polynomial: " << poly.to_string() << "\n";
      if (bfs && by_degrees) out << (match ? "bfs and degree formula agree\n" : "MISMATCH between bfs and degree formula\n");
      if (!bfs) out << "(computed from invariant degrees; no enumeration)\n";
    }
    return int{match ? kOk : kIdentityFailed};
  });
}

int cmd_limit(const LimitArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(args.raw_poly.value_or(args.scheme), err, [&] {
    const Resolved r = resolve(args.scheme, args.raw_poly);
    HighReal s0;
    try {
      s0 = HighReal(args.s0);
    } catch (const std::exception&) {
      throw DivergentParameters("cannot read s0 '" + args.s0 + "' as a real number");
    }
    if (args.steps < 1 || args.steps > 30) throw DivergentParameters("steps must be in [1, 30]");

    const LimitReport rep = soule_limit_check(r.counting, LimitProbe::decimal(s0, args.steps));
    if (args.format == OutputFormat::Json) {
      Json rec = output_record(r.text, r.counting, r.dimension);
      Json lim;
      lim["s0"] = args.s0;
      lim["target"] = rational_text(rep.target);
      Json steps = Json::array();
      for (const auto& st : rep.steps) {
        Json j;
        j["h"] = st.h.convert_to<double>();
        j["value"] = st.value.convert_to<double>();
        j["relative_error"] = st.relative_error.convert_to<double>();
        steps.push_back(std::move(j));
      }
      lim["steps"] = std::move(steps);
      lim["tail_monotone"] = rep.tail_monotone;
      lim["holds"] = rep.holds;
      rec["limit"] = std::move(lim);
      out << rec.dump(2) << "\n";
    } else {
      out << "scheme: " << r.text << ", chi=" << rep.chi << ", s0=" << args.s0
          << ", target=" << rational_text(rep.target) << "\n";
      out << "h\tvalue\ttarget\trelative_error\n";
      const HighReal target = HighReal(numerator(rep.target)) / HighReal(denominator(rep.target));
      for (const auto& st : rep.steps)
        out << real_text(st.h) << "\t" << real_text(st.value) << "\t" << real_text(target) << "\t"
            << real_text(st.relative_error) << "\n";
      out << "converges: " << (rep.holds ? "yes" : "no") << " (monotone tail: " << (rep.tail_monotone ? "yes" : "no")
          << ", final relative error below " << kLimitFinalTolerance << " required)\n";
    }
    return int{rep.holds ? kOk : kIdentityFailed};
  });
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting polynomials and F1-zeta functions of catalog schemes", "f1zeta"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"plain", "latex", "json"};

  std::string format = "plain";
  ZetaArgs zeta_args;
  auto* zeta = app.add_subcommand("zeta", "Counting polynomial, Euler characteristic and zeta function");
  auto* zeta_scheme = zeta->add_option("--scheme", zeta_args.scheme, "Scheme descriptor, e.g. \"GL(3)\"");
  auto* zeta_raw = zeta->add_option("--raw-poly", zeta_args.raw_poly,
                                    "Counting polynomial coefficients, low degree first (skips geometric checks)");
  zeta_scheme->excludes(zeta_raw);
  zeta->add_option("--format", format)->check(CLI::IsMember(formats));

  CheckFeArgs fe_args;
  auto* check_fe = app.add_subcommand("check-fe", "Check the functional equations for a scheme");
  check_fe->add_option("--scheme", fe_args.scheme)->required();
  check_fe->add_option("--format", format)->check(CLI::IsMember(formats));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Evaluate N(q) and optionally brute-force count points");
  count->add_option("--scheme", count_args.scheme)->required();
  count->add_option("--q", count_args.primes, "Field sizes")->delimiter(',');
  count->add_flag("--oracle", count_args.oracle, "Compare with brute-force enumeration over F_p");
  count->add_option("--max-enumeration", count_args.max_enumeration, "Brute-force size bound");
  count->add_option("--format", format)->check(CLI::IsMember(formats));

  WeylArgs weyl_args;
  auto* weyl = app.add_subcommand("weyl", "Weyl group order, length histogram and Poincare polynomial");
  weyl->add_option("--type", weyl_args.family)->required();
  weyl->add_option("--rank", weyl_args.rank)->required();
  weyl->add_option("--method", weyl_args.method)->check(CLI::IsMember({"bfs", "degrees", "both"}));
  weyl->add_option("--cap", weyl_args.cap, "Largest group order to enumerate");
  weyl->add_option("--format", format)->check(CLI::IsMember(formats));

  LimitArgs limit_args;
  auto* limit = app.add_subcommand("limit", "Numerically approach zeta(s0) as q -> 1");
  auto* limit_scheme = limit->add_option("--scheme", limit_args.scheme);
  auto* limit_raw = limit->add_option("--raw-poly", limit_args.raw_poly);
  limit_scheme->excludes(limit_raw);
  limit->add_option("--s", limit_args.s0, "Evaluation point s0")->required();
  limit->add_option("--steps", limit_args.steps, "Number of offsets h = 10^-k");
  limit->add_option("--format", format)->check(CLI::IsMember(formats));

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  const OutputFormat fmt = format_from(format);
  if (zeta->parsed()) {
    if (zeta_args.scheme.empty() && !zeta_args.raw_poly) {
      err << "zeta: one of --scheme or --raw-poly is required\n";
      return kParseError;
    }
    zeta_args.format = fmt;
    return cmd_zeta(zeta_args, out, err);
  }
  if (check_fe->parsed()) {
    fe_args.format = fmt;
    return cmd_check_fe(fe_args, out, err);
  }
  if (count->parsed()) {
    count_args.format = fmt;
    return cmd_count(count_args, out, err);
  }
  if (weyl->parsed()) {
    weyl_args.format = fmt;
    return cmd_weyl(weyl_args, out, err);
  }
  if (limit_scheme->count() == 0 && !limit_args.raw_poly) {
    err << "limit: one of --scheme or --raw-poly is required\n";
    return kParseError;
  }
  limit_args.format = fmt;
  return cmd_limit(limit_args, out, err);
}

}  // namespace f1zeta::cli
