// qdisc: command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdisc/flag.hpp"
#include "qdisc/fock.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/modalg.hpp"
#include "qdisc/parse.hpp"
#include "qdisc/report.hpp"
#include "qdisc/rmatrix.hpp"
#include "qdisc/rootdata.hpp"

using namespace qdisc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra = "pol";
  int N = 8;
  std::string q0;
  int degree = 4;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> args;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (json_out(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

const Presentation& presentation_for(const std::string& name) {
  if (name == "c_sl2_q" || name == "qsl2") return qsl2_presentation();
  try {
    return carrier_by_name(name).presentation();
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown algebra '" + name +
                     "' (expected pol, extended, holomorphic, antiholomorphic, laurent, c_sl2_q or uqsl2)");
  }
}

const PresentedCarrier& carrier_for(const std::string& name) {
  if (name == "c_sl2_q" || name == "qsl2") return qsl2_carrier();
  try {
    return carrier_by_name(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown module algebra '" + name + "'");
  }
}

const std::string& one_arg(const Options& o, const char* what) {
  if (o.args.size() != 1) throw UsageError(std::string("expected exactly one ") + what);
  return o.args[0];
}

int cmd_nf(const Options& o) {
  const std::string& text = one_arg(o, "expression");
  if (o.algebra == "uqsl2") {
    const UqElement x = UqElement::parse(text);
    emit(o, {{"algebra", "uqsl2"}, {"input", text}, {"normal_form", x.str()}}, x.str() + '\n');
    return 0;
  }
  const Presentation& p = presentation_for(o.algebra);
  const std::string nf = p.format(normal_form(p.parse(text), p));
  emit(o, {{"algebra", p.name()}, {"input", text}, {"normal_form", nf}}, nf + '\n');
  return 0;
}

int cmd_act(const Options& o) {
  if (o.args.size() != 2) throw UsageError("act expects an element of U_q(sl2) and an element of the algebra");
  const UqElement xi = UqElement::parse(o.args[0]);
  const PresentedCarrier& c = carrier_for(o.algebra);
  const NCExpr f = c.presentation().parse(o.args[1]);
  const std::string out = c.format(act(c, xi, f));
  emit(o, {{"algebra", c.name()}, {"xi", xi.str()}, {"f", c.format(normal_form(f, c.presentation()))}, {"result", out}},
       out + '\n');
  return 0;
}

int cmd_fock(const Options& o) {
  const std::string& text = one_arg(o, "expression");
  if (o.N < 1) throw UsageError("--N must be positive");
  const Presentation& p = o.algebra == "extended" ? extended_pol_cq() : pol_cq();
  const NCExpr f = p.parse(text);
  const FockMatrix m = represent(f, p, o.N);
  std::vector<int> boundary;
  for (int j = 0; j <= o.N; ++j)
    if (m.is_boundary(j)) boundary.push_back(j);
  json j{{"element", p.format(normal_form(f, p))}, {"N", o.N}, {"boundary_columns", boundary}};
  std::ostringstream text_out;
  if (o.q0.empty()) {
    j["basis"] = "weighted";
    j["matrix"] = to_json(m.m);
    for (const auto& row : to_strings(m.m)) {
      for (std::size_t c = 0; c < row.size(); ++c) text_out << (c ? "  " : "") << row[c];
      text_out << '\n';
    }
  } else {
    const double q0 = parse_rational(o.q0).get_d();
    const Eigen::MatrixXd num = orthonormal_numeric(f, p, o.N, q0);
    j["basis"] = "orthonormal";
    j["q0"] = o.q0;
    j["matrix"] = to_json(num);
    const Eigen::IOFormat fmt(12, 0, "  ", "\n", "", "", "", "");
    text_out << num.format(fmt) << '\n';
  }
  if (!boundary.empty()) {
    text_out << "boundary columns:";
    for (int b : boundary) text_out << ' ' << b;
    text_out << '\n';
  }
  emit(o, j, text_out.str());
  return 0;
}

int cmd_integral(const Options& o) {
  const std::string& text = one_arg(o, "expression");
  const FiniteFunction f = FiniteFunction::from_expr(extended_pol_cq().parse(text));
  const Scalar v = integrate(f);
  emit(o, {{"function", f.str()}, {"integral", v.str()}}, v.str() + '\n');
  return 0;
}

int cmd_rmatrix(const Options& o) {
  const WeightTensor in = WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1);
  const WeightTensor r = r_apply(in);
  const WeightTensor b = braiding(in);
  const Presentation derived = derive_relations();
  const bool same = same_presentation(derived, pol_cq());
  std::vector<std::string> rules;
  for (const auto& rule : derived.rules())
    rules.push_back(derived.format_word(rule.lhs) + " -> " + derived.format(rule.rhs));
  std::ostringstream t;
  t << "R (z^* (x) z)      = " << r.str() << '\n'
    << "braiding(z^* (x) z) = " << b.str() << '\n';
  for (const auto& s : rules) t << "derived rule: " << s << '\n';
  t << "matches pol_c_q: " << (same ? "yes" : "no") << '\n';
  emit(o, {{"input", in.str()}, {"r_applied", r.str()}, {"braiding", b.str()}, {"derived_rules", rules},
           {"matches_presentation", same}},
       t.str());
  return same ? 0 : 1;
}

int cmd_rootdata(const Options& o) {
  const std::string& label = one_arg(o, "type label such as A3 or E8");
  CartanData c;
  try {
    c = build(label);
  } catch (const RootDataError& e) {
    throw UsageError(e.what());
  }
  const json j = to_json(c);
  std::ostringstream t;
  t << "type " << c.label() << "\nCartan matrix:\n" << c.a << "\nsymmetrizers:";
  for (int d : c.d) t << ' ' << d;
  t << "\npositive roots: " << j["positive_root_count"] << "\nmaximal root: " << j["maximal_root"].dump()
    << "\nl0 candidates: " << j["l0_candidates"].dump() << '\n';
  for (const auto& g : j["gradations"])
    t << "  l0 = " << g["l0"] << ": dim k = " << g["dim_k"] << ", dim p+ = " << g["dim_p_plus"]
      << ", dim p- = " << g["dim_p_minus"] << '\n';
  emit(o, j, t.str());
  return 0;
}

int cmd_flag_demo(const Options& o) {
  const Scalar lx = quasi_commute(Spherical::X), ly = quasi_commute(Spherical::Y), lw = quasi_commute(Spherical::W);
  const LocalizedElement z = z_power(1), zp = z_power(-1);
  const LocalizedElement prod = z * zp;
  const auto match = laurent_action_match(4);
  std::ostringstream t;
  t << "y x = (" << lx << ") x y\ny y = (" << ly << ") y y\ny w = (" << lw << ") w y\n";
  t << "x w = " << qsl2_presentation().format(multiply(spherical_generator(Spherical::X),
                                                        spherical_generator(Spherical::W), qsl2_presentation()))
    << "   (y^2 = "
    << qsl2_presentation().format(power(spherical_generator(Spherical::Y), 2, qsl2_presentation())) << ")\n";
  t << "Z = " << z.str() << ", Z' = " << zp.str() << ", Z Z' = " << prod.str() << '\n';
  t << "normalisation z = c Z with c = " << match.normalization << "\n\n";
  json rows = json::array();
  for (const auto& r : match.rows) {
    t << (r.ok ? "ok   " : "FAIL ") << gen_name(r.g) << " z^" << r.n << " = (" << r.expected << ") z^" << r.target
      << '\n';
    rows.push_back({{"xi", gen_name(r.g)}, {"n", r.n}, {"target", r.target}, {"localized", r.localized.str()},
                    {"expected", r.expected.str()}, {"ok", r.ok}});
  }
  if (!match.passed()) t << match.failure << '\n';
  emit(o,
       {{"quasi_commutation", {{"x", lx.str()}, {"y", ly.str()}, {"w", lw.str()}}},
        {"Z", z.str()},
        {"Z_prime", zp.str()},
        {"Z_Z_prime", prod.str()},
        {"normalization", match.normalization.str()},
        {"action_match", rows},
        {"passed", match.passed()}},
       t.str());
  return match.passed() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  if (o.args.empty()) throw UsageError("verify needs a suite: all or one of the suite names");
  VerifyOptions v;
  v.degree = o.degree;
  v.N = o.N;
  v.seed = o.seed;
  if (!o.q0.empty()) v.q0 = parse_rational(o.q0);
  if (v.q0 <= 0 || v.q0 >= 1) throw UsageError("--q0 must lie strictly between 0 and 1");
  if (v.degree < 0 || v.N < 1) throw UsageError("--degree must be non-negative and --N positive");
  VerifyReport r;
  try {
    r = run_verify(o.args, v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(o, to_json(r), to_text(r));
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the quantum disc and related quantum group structures"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized property checks");

  std::map<std::string, int (*)(const Options&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--seed", o.seed, "Seed for randomized property checks");
    handlers[name] = fn;
    return s;
  };

  auto* nf = sub("nf", "Normal form of an expression", cmd_nf);
  nf->add_option("--algebra", o.algebra, "pol, extended, holomorphic, antiholomorphic, laurent, c_sl2_q or uqsl2");
  nf->add_option("expression", o.args)->required();

  auto* ac = sub("act", "Action of an element of U_q(sl2) on an element of a module algebra", cmd_act);
  ac->add_option("--algebra", o.algebra, "pol, extended, holomorphic, antiholomorphic, laurent or c_sl2_q");
  ac->add_option("operands", o.args, "xi and f")->required()->expected(2);

  auto* fo = sub("fock", "Matrix of an element in the truncated Fock representation", cmd_fock);
  fo->add_option("--algebra", o.algebra, "pol or extended");
  fo->add_option("--N", o.N, "Truncation: basis E_0..E_N");
  fo->add_option("--q0", o.q0, "Evaluate numerically in the orthonormal basis at this rational q");
  fo->add_option("expression", o.args)->required();

  auto* in = sub("integral", "Invariant integral of a finite function", cmd_integral);
  in->add_option("expression", o.args)->required();

  sub("rmatrix-demo", "Derive the commutation relation from the R-matrix", cmd_rmatrix);

  auto* rd = sub("rootdata", "Cartan data, roots and gradations of a simple Lie algebra", cmd_rootdata);
  rd->add_option("type", o.args, "Type label such as A3, C2 or E8")->required();

  sub("flag-demo", "Spherical subalgebra, localisation and the Laurent action", cmd_flag_demo);

  auto* ve = sub("verify", "Run verification suites", cmd_verify);
  ve->add_option("suites", o.args, "all, or any of: scalars ncpoly rootdata uqsl2 modalg rmatrix fock integral flag");
  ve->add_option("--degree", o.degree, "Degree bound");
  ve->add_option("--N", o.N, "Fock truncation");
  ve->add_option("--q0", o.q0, "Rational q0 in (0, 1) for numeric and positivity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_name() == "verify" && chosen->count("--N") == 0) o.N = 32;
  try {
    return handlers.at(chosen->get_name())(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotFiniteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
