#include "spf/cli.hpp"

#include "spf/expr.hpp"
#include "spf/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace spf {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "spf-report/1";

struct Inputs {
  std::string u0, u1, q0, q1;
  std::vector<std::string> consts;
  int max_level = 5;
  std::string format = "text";
};

struct Resolved {
  Potentials pot;
  Bindings bindings;
  json echo;
};

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--const expects name=p/q, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    try {
      b[name] = parse_rat(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("--const ") + name + ": " + e.what());
    }
  }
  return b;
}

Resolved resolve(const Inputs& in) {
  Resolved r;
  r.bindings = parse_bindings(in.consts);
  const bool has_u = !in.u0.empty() || !in.u1.empty();
  const bool has_q = !in.q0.empty() || !in.q1.empty();
  if (has_u && has_q) throw PreconditionViolated("give the potentials either as --u0/--u1 or as --q0/--q1");
  auto value = [&](const std::string& text) {
    return text.empty() ? RationalFunction() : parse_ratfunc(text, r.bindings);
  };
  r.pot = has_q ? Potentials::from_q(value(in.q0), value(in.q1)) : Potentials::from_u(value(in.u0), value(in.u1));
  json consts = json::object();
  for (const auto& [k, v] : r.bindings) consts[k] = to_string(v);
  r.echo = {{"given", has_q ? "q" : "u"},
            {"u0", to_string(r.pot.u0)},
            {"u1", to_string(r.pot.u1)},
            {"q0", to_string(r.pot.q0)},
            {"q1", to_string(r.pot.q1)},
            {"constants", consts}};
  return r;
}

json op_json(const DiffOp& op) {
  json coeffs = json::array();
  for (const auto& c : op.coefficients()) coeffs.push_back(to_string(c));
  return {{"order", op.order()}, {"operator", to_string(op)}, {"coefficients", coeffs}};
}

DiffOp op_from_json(const json& j) {
  std::vector<RationalFunction> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(parse_ratfunc(c.get<std::string>()));
  return DiffOp(std::move(coeffs));
}

json consts_json(const ConstVec& c) {
  json a = json::array();
  for (const auto& v : c) a.push_back(to_string(v));
  return a;
}

json basis_json(const CentralizerBasis& b) {
  json a1 = op_json(b.A1), a2 = op_json(b.A2);
  a1["level"] = b.n1;
  a1["constants"] = consts_json(b.c1);
  a2["level"] = b.n2;
  a2["constants"] = consts_json(b.c2);
  return {{"A1", a1}, {"A2", a2}};
}

json curve_json(const SpectralCurve& c) {
  json j = {{"f1", to_string(c.f1)},
            {"f2", to_string(c.f2)},
            {"f3", to_string(c.f3)},
            {"f1_raw", to_string(c.raw1)},
            {"f2_raw", to_string(c.raw2)},
            {"f3_raw", to_string(c.raw3)},
            {"orders", c.orders},
            {"verdict", verdict_name(c.verdict)}};
  if (c.certificate) j["certificate"] = to_string(*c.certificate);
  if (c.verdict == Verdict::HeuristicallyPrime)
    j["note"] = "f3 squarefree and coprime orders; primality is not certified";
  return j;
}

json point_json(const CurvePoint& p) {
  json j = {{"lambda0", to_string(p.lambda0)}, {"mu0", to_string(p.mu0)}};
  if (p.gamma0) j["gamma0"] = to_string(*p.gamma0);
  return j;
}

CurvePoint point_from_json(const json& j) {
  CurvePoint p{parse_rat(j.at("lambda0").get<std::string>()), parse_rat(j.at("mu0").get<std::string>()), std::nullopt};
  if (j.contains("gamma0")) p.gamma0 = parse_rat(j.at("gamma0").get<std::string>());
  return p;
}

json checks_json(const VerificationReport& r) {
  json j = {{"cofactor_identity", r.cofactor_identity},
            {"division_exact", r.division_exact},
            {"divides_a1", r.divides_a1},
            {"ratios_agree", r.ratios_agree}};
  if (r.divides_a2) j["divides_a2"] = *r.divides_a2;
  return j;
}

json factorization_json(const FactorizationResult& f) {
  return {{"phi0", to_string(f.phi0)},
          {"right_factor", op_json(f.right_factor)},
          {"quotient", op_json(f.quotient)},
          {"verification", checks_json(f.checks)},
          {"verified", f.verified}};
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Parametrization parse_param(const std::string& text, const Bindings& b) {
  Parametrization p;
  for (const auto& part : split_top_level(text)) p.components.push_back(parse_upoly(part, b, "t"));
  return p;
}

Rat parse_rat_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(flag + ": " + e.what());
  }
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (key == "coefficients" || key == "schema") continue;
    if (value.is_object()) {
      if (value.contains("operator")) {
        out << pad << key << ": " << value.at("operator").get<std::string>() << "\n";
        json rest = value;
        rest.erase("operator");
        rest.erase("coefficients");
        render_text(rest, out, indent + 1);
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 1);
      }
    } else if (value.is_array()) {
      if (!value.empty() && value.front().is_object()) {
        out << pad << key << ":\n";
        for (const auto& item : value) {
          out << pad << "  -\n";
          render_text(item, out, indent + 2);
        }
      } else {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i)
          out << (i ? ", " : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
        out << "]\n";
      }
    } else {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report.dump(2) << "\n";
  else
    render_text(report, out, 0);
}

json new_report(const std::string& command, const Resolved& r) {
  return {{"schema", kSchema}, {"command", command}, {"input", r.echo}};
}

int finish(json& report, int code, const std::string& diagnostic, const std::string& format, std::ostream& out,
           std::ostream& err) {
  if (!diagnostic.empty()) {
    report["diagnostic"] = diagnostic;
    err << diagnostic << "\n";
  }
  report["exit_code"] = code;
  emit(report, format, out);
  return code;
}

int cmd_centralizer(const Inputs& in, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(in);
  json report = new_report("centralizer", r);
  try {
    report["centralizer"] = basis_json(centralizer_basis(r.pot, in.max_level));
  } catch (const NoCentralizerFound& e) {
    return finish(report, kExitNoFactorization, e.what(), in.format, out, err);
  }
  return finish(report, kExitOk, "", in.format, out, err);
}

int cmd_curve(const Inputs& in, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(in);
  json report = new_report("curve", r);
  CentralizerBasis basis;
  try {
    basis = centralizer_basis(r.pot, in.max_level);
  } catch (const NoCentralizerFound& e) {
    return finish(report, kExitNoFactorization, e.what(), in.format, out, err);
  }
  report["centralizer"] = basis_json(basis);
  report["curve"] = curve_json(spectral_curve(boussinesq_operator(r.pot), basis));
  return finish(report, kExitOk, "", in.format, out, err);
}

int cmd_factor(const Inputs& in, const std::string& lambda0, const std::string& param, const std::string& tau0,
               std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(in);
  SpfTarget target;
  if (!param.empty() || !tau0.empty()) {
    if (param.empty() || tau0.empty()) throw PreconditionViolated("--param and --tau0 go together");
    target.param = parse_param(param, r.bindings);
    target.tau0 = parse_rat_flag("--tau0", tau0);
  } else if (!lambda0.empty()) {
    target.lambda0 = parse_rat_flag("--lambda0", lambda0);
  } else {
    throw PreconditionViolated("factor needs --lambda0 or --param with --tau0");
  }
  json report = new_report("factor", r);
  const SpfOutcome o = spectral_factorization(r.pot, target, in.max_level);
  report["outcome"] = outcome_name(o.outcome);
  if (o.basis) report["centralizer"] = basis_json(*o.basis);
  if (o.curve) report["curve"] = curve_json(*o.curve);
  if (o.point) report["point"] = point_json(*o.point);
  if (!o.candidates.empty()) {
    json c = json::array();
    for (const auto& p : o.candidates) c.push_back(point_json(p));
    report["candidates"] = c;
  }
  if (o.z) report["z"] = {{"in_z", o.z->in_z}, {"reasons", o.z->reasons}};
  if (o.result) report["factorization"] = factorization_json(*o.result);

  switch (o.outcome) {
    case Outcome::Factored:
      if (!o.result->verified)
        return finish(report, kExitInternal, "factorization failed verification", in.format, out, err);
      return finish(report, kExitOk, "", in.format, out, err);
    case Outcome::NotGeometricallyReducible:
      return finish(report, kExitNotGeometricallyReducible, o.diagnostic, in.format, out, err);
    default: return finish(report, kExitNoFactorization, o.diagnostic, in.format, out, err);
  }
}

int cmd_factor_planar(const Inputs& in, int a1_level, const std::string& lambda0, const std::string& param,
                      const std::string& tau0, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(in);
  json report = new_report("factor-planar", r);
  Hierarchy h(r.pot);
  const int lo = a1_level >= 0 ? a1_level : 0;
  const int hi = a1_level >= 0 ? a1_level : in.max_level;
  const auto a1 = branch_operator(h, 1, lo, hi);
  if (!a1)
    return finish(report, kExitNoFactorization, "no commuting operator in branch 1 at the requested levels",
                  in.format, out, err);
  json a1j = op_json(a1->op);
  a1j["level"] = a1->n;
  a1j["constants"] = consts_json(a1->c);
  report["centralizer"] = {{"A1", a1j}};
  const DiffOp& l = h.L();
  const SpectralPair pair{l, a1->op, Var::Lambda, Var::Mu};
  const CurvePoly raw = diff_resultant(pair);
  const CurvePoly f1 = sign_normalized(raw, Var::Mu);
  report["curve"] = {{"f1", to_string(f1)}, {"f1_raw", to_string(raw)}};

  CurvePoint point;
  if (!param.empty() || !tau0.empty()) {
    if (param.empty() || tau0.empty()) throw PreconditionViolated("--param and --tau0 go together");
    point = point_from_tau(parse_param(param, r.bindings), parse_rat_flag("--tau0", tau0), f1);
  } else if (!lambda0.empty()) {
    const Rat l0 = parse_rat_flag("--lambda0", lambda0);
    UPoly in_mu;
    for (const auto& [e, c] : f1.terms()) {
      Rat m = c.constant_value();
      for (int k = 0; k < e[0]; ++k) m *= l0;
      in_mu += UPoly::monomial(m, e[1]);
    }
    const auto roots = in_mu.is_zero() ? std::vector<Rat>{} : rational_roots(in_mu);
    if (roots.empty()) return finish(report, kExitNoFactorization, kNoRationalPoint, in.format, out, err);
    json c = json::array();
    for (const auto& mu : roots) c.push_back(point_json({l0, mu, std::nullopt}));
    report["candidates"] = c;
    point = {l0, roots.front(), std::nullopt};
  } else {
    throw PreconditionViolated("factor-planar needs --lambda0 or --param with --tau0");
  }
  report["point"] = point_json(point);
  const FactorizationResult f = planar_factor(l, a1->op, point);
  report["outcome"] = outcome_name(Outcome::Factored);
  report["factorization"] = factorization_json(f);
  if (!f.verified) return finish(report, kExitInternal, "factorization failed verification", in.format, out, err);
  return finish(report, kExitOk, "", in.format, out, err);
}

int cmd_verify(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) throw PreconditionViolated("cannot read report '" + path + "'");
  json report;
  try {
    report = json::parse(file);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (report.value("schema", "") != kSchema) throw ParseError("report schema is not " + std::string(kSchema));

  json result = {{"schema", kSchema}, {"command", "verify"}, {"report", path}};
  json checks = json::object();
  bool reproduced = true;
  try {
    const json& input = report.at("input");
    const DiffOp l = boussinesq_operator(
        Potentials::from_u(parse_ratfunc(input.at("u0").get<std::string>()), parse_ratfunc(input.at("u1").get<std::string>())));
    std::optional<DiffOp> a1, a2;
    if (report.contains("centralizer")) {
      const json& c = report.at("centralizer");
      if (c.contains("A1")) a1 = op_from_json(c.at("A1"));
      if (c.contains("A2")) a2 = op_from_json(c.at("A2"));
    }
    if (a1) checks["A1_commutes"] = commutator(*a1, l).is_zero();
    if (a2) checks["A2_commutes"] = commutator(*a2, l).is_zero();
    if (a1 && a2 && report.contains("curve") && report.at("curve").contains("f3")) {
      const json& c = report.at("curve");
      bool vanish = true;
      for (const char* key : {"f1", "f2", "f3"})
        vanish = vanish && operator_poly_eval(parse_curvepoly(c.at(key).get<std::string>()), l, *a1, *a2).is_zero();
      checks["burchnall_chaundy"] = vanish;
    }
    for (const char* key : {"A1_commutes", "A2_commutes", "burchnall_chaundy"})
      if (checks.contains(key) && !checks[key].get<bool>()) reproduced = false;

    if (report.contains("factorization")) {
      if (!a1) throw ParseError("report has a factorization but no A1");
      const json& fj = report.at("factorization");
      const CurvePoint point = point_from_json(report.at("point"));
      const RationalFunction phi0 = parse_ratfunc(fj.at("phi0").get<std::string>());
      VerificationReport again;
      if (a2 && point.gamma0) {
        const Potentials pot = Potentials::from_u(l.coeff(0), l.coeff(1));
        again = verify_spectral_factorization(l, pot, point, phi0, {*a1, *a2, 0, 0, {}, {}});
      } else {
        again = verify_planar_factorization(l, point, phi0, *a1);
      }
      const json recomputed = checks_json(again);
      json table = json::object();
      for (const auto& [key, value] : recomputed.items()) {
        const bool stored = fj.at("verification").value(key, !value.get<bool>());
        table[key] = {{"stored", stored}, {"recomputed", value.get<bool>()}};
        if (stored != value.get<bool>()) reproduced = false;
      }
      const bool factors_match = op_from_json(fj.at("right_factor")) == DiffOp(std::vector<RationalFunction>{phi0, 1}) &&
                                 op_from_json(fj.at("quotient")) == spectral_cofactor(phi0, l.coeff(1));
      checks["factors_match_phi0"] = factors_match;
      if (!factors_match && fj.value("verified", false)) reproduced = false;
      result["verification"] = table;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  result["checks"] = checks;
  result["reproduced"] = reproduced;
  json dummy = result;
  return finish(dummy, reproduced ? kExitOk : kExitInternal, reproduced ? "" : "report does not reproduce", format,
                out, err);
}

void add_common(CLI::App* sub, Inputs& in) {
  sub->add_option("--u0", in.u0, "potential u0 in x");
  sub->add_option("--u1", in.u1, "potential u1 in x");
  sub->add_option("--q0", in.q0, "potential q0 in x (u0 = q1'/2 + q0)");
  sub->add_option("--q1", in.q1, "potential q1 in x (u1 = q1)");
  sub->add_option("--const", in.consts, "named constant, name=p/q (repeatable)");
  sub->add_option("--max-level", in.max_level, "highest hierarchy level searched")->check(CLI::Range(0, 12));
  sub->add_option("--format", in.format, "report format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral factorization of third-order Boussinesq operators", "spf"};
  app.require_subcommand(1);
  Inputs in;
  std::string lambda0, param, tau0, report_path;
  std::string verify_format = "text";
  int a1_level = -1;

  auto* centralizer = app.add_subcommand("centralizer", "generators A1, A2 of the centralizer of L");
  add_common(centralizer, in);
  auto* curve = app.add_subcommand("curve", "spectral curve ideal (f1, f2, f3) and primality verdict");
  add_common(curve, in);
  auto* factor = app.add_subcommand("factor", "spectral factorization L - lambda0 = N (d + phi0)");
  add_common(factor, in);
  factor->add_option("--lambda0", lambda0, "eigenvalue p/q");
  factor->add_option("--param", param, "parametrization \"c1(t), c2(t), c3(t)\"");
  factor->add_option("--tau0", tau0, "parameter value p/q");
  auto* planar = app.add_subcommand("factor-planar", "factorization from the pair (L, A1) alone");
  add_common(planar, in);
  planar->add_option("--a1-level", a1_level, "hierarchy level n of A1 = P_{3n+1}")->check(CLI::Range(0, 12));
  planar->add_option("--lambda0", lambda0, "eigenvalue p/q");
  planar->add_option("--param", param, "parametrization \"c1(t), c2(t)\"");
  planar->add_option("--tau0", tau0, "parameter value p/q");
  auto* verify = app.add_subcommand("verify", "re-check a JSON report");
  verify->add_option("report", report_path, "report file")->required();
  verify->add_option("--format", verify_format, "report format")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"spf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*centralizer) return cmd_centralizer(in, out, err);
    if (*curve) return cmd_curve(in, out, err);
    if (*factor) return cmd_factor(in, lambda0, param, tau0, out, err);
    if (*planar) return cmd_factor_planar(in, a1_level, lambda0, param, tau0, out, err);
    if (*verify) return cmd_verify(report_path, verify_format, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnboundConstant& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionViolated& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotOnCurve& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoFactorization;
  } catch (const ZeroDenominator& e) {
    err << kCannotFactor << " (" << e.what() << ")\n";
    return kExitNoFactorization;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "internal error [" << e.kind() << "]: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace spf
