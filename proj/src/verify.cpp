#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

#include "qdisc/flag.hpp"
#include "qdisc/fock.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/modalg.hpp"
#include "qdisc/random.hpp"
#include "qdisc/report.hpp"
#include "qdisc/rmatrix.hpp"
#include "qdisc/rootdata.hpp"

namespace qdisc {

namespace {

struct Outcome {
  bool passed = false;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
};

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& o) : name_(std::move(name)), opts_(o) {}

  template <class Fn>
  void check(std::string name, std::string topic, bool exact, Fn&& fn) {
    CheckResult r{name_, std::move(name), std::move(topic), exact, false, 0, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      r.passed = o.passed;
      r.cases = o.cases;
      r.witnesses = std::move(o.witnesses);
    } catch (const std::exception& e) {
      r.passed = false;
      r.witnesses.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.witnesses.size() > 8) r.witnesses.resize(8);
    out_.push_back(std::move(r));
  }

  const VerifyOptions& opts() const { return opts_; }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string name_;
  VerifyOptions opts_;
  std::vector<CheckResult> out_;
};

/// Collects failing cases of a family of boolean checks.
class Tally {
 public:
  void operator()(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) failures_.push_back(what);
  }
  Outcome done() const { return {failures_.empty(), cases_, failures_}; }

 private:
  std::size_t cases_ = 0;
  std::vector<std::string> failures_;
};

Outcome from_axioms(const AxiomReport& r) {
  Outcome o{r.passed(), r.checked, {}};
  for (const auto& f : r.failures) o.witnesses.push_back(f.what + ": " + f.lhs + " != " + f.rhs);
  return o;
}

// ------------------------------------------------------------- suites

void scalars_suite(Suite& s) {
  s.check("field_axioms", "Q(q^(1/2)) is a field", true, [&] {
    RandomSource rnd(s.opts().seed);
    Tally t;
    for (int i = 0; i < 60; ++i) {
      const Scalar a = rnd.scalar(), b = rnd.scalar(), c = rnd.scalar();
      t((a + b) + c == a + (b + c), "associativity of + at " + a.str());
      t(a * b == b * a, "commutativity at " + a.str() + ", " + b.str());
      t(a * (b + c) == a * b + a * c, "distributivity at " + a.str());
      t(a * a.inverse() == Scalar(1), "inverse of " + a.str());
      t((a - a).is_zero(), "a - a at " + a.str());
    }
    return t.done();
  });
  s.check("print_parse_roundtrip", "canonical strings reparse to the same scalar", true, [&] {
    RandomSource rnd(s.opts().seed + 1);
    Tally t;
    for (int i = 0; i < 60; ++i) {
      const Scalar a = rnd.scalar();
      t(Scalar::parse(a.str()) == a, a.str());
    }
    return t.done();
  });
  s.check("canonical_examples", "printing and simplification of sample scalars", true, [] {
    Tally t;
    t(Scalar::sqrt_q().str() == "q^(1/2)", Scalar::sqrt_q().str());
    const Scalar q2 = Scalar::q_power(2);
    t((Scalar(1) - q2) / (q2.inverse() - Scalar(1)) == q2, "(1 - q^2)/(q^-2 - 1)");
    t(Scalar::parse("q^-1 + 3*q^2").str() == "q^-1 + 3*q^2", Scalar::parse("q^-1 + 3*q^2").str());
    t(Scalar::parse("1/(1 - q^2)").str() == "-1/(-1 + q^2)", Scalar::parse("1/(1 - q^2)").str());
    return t.done();
  });
}

void ncpoly_suite(Suite& s) {
  for (const Presentation* p : {&pol_cq(), &qsl2_presentation()}) {
    s.check("confluence_" + p->name(), "all overlap and inclusion ambiguities resolve to degree 6", true, [p] {
      const auto r = check_local_confluence(*p, 6);
      Outcome o{r.confluent(), r.ambiguities.size(), {}};
      for (const auto& a : r.ambiguities)
        if (!a.resolved) o.witnesses.push_back(p->format_word(a.word));
      return o;
    });
    s.check("associativity_" + p->name(), "normal-form product is associative", true, [&s, p] {
      RandomSource rnd(s.opts().seed + 2);
      Tally t;
      for (int i = 0; i < 30; ++i) {
        const NCExpr a = rnd.expr(*p, 3), b = rnd.expr(*p, 3), c = rnd.expr(*p, 3);
        t(multiply(multiply(a, b, *p), c, *p) == multiply(a, multiply(b, c, *p), *p), p->format(a));
      }
      return t.done();
    });
    s.check("format_parse_roundtrip_" + p->name(), "printed normal forms reparse to themselves", true, [&s, p] {
      RandomSource rnd(s.opts().seed + 3);
      Tally t;
      for (int i = 0; i < 40; ++i) {
        const NCExpr a = normal_form(rnd.expr(*p, 4), *p);
        t(normal_form(p->parse(p->format(a)), *p) == a, p->format(a));
      }
      return t.done();
    });
  }
  s.check("star_pol_c_q", "the star is an involutive anti-automorphism preserving the relation", true, [&s] {
    const auto& p = pol_cq();
    RandomSource rnd(s.opts().seed + 4);
    Tally t;
    for (int i = 0; i < 40; ++i) {
      const NCExpr a = rnd.expr(p, 4), b = rnd.expr(p, 3);
      t(star(star(a, p), p) == a, "star star " + p.format(a));
      t(star(a * b, p) == star(b, p) * star(a, p), "anti-multiplicative at " + p.format(a));
      t(normal_form(star(normal_form(a, p), p), p) == normal_form(star(a, p), p), "well defined at " + p.format(a));
    }
    return t.done();
  });
}

void rootdata_suite(Suite& s) {
  std::vector<CartanData> all;
  for (char type : std::string("ABCDEFG"))
    for (int l = 1; l <= 12; ++l) try {
        all.push_back(build(type, l));
      } catch (const RootDataError&) {
      }
  s.check("cartan_invariants", "a_ii = 2, off-diagonal signs and symmetrizers", true, [&] {
    Tally t;
    for (const auto& c : all) t(is_valid(c), c.label());
    return t.done();
  });
  s.check("root_counts", "enumerated positive roots match the classical counts", true, [&] {
    Tally t;
    for (const auto& c : all) t(positive_roots(c).size() == positive_root_count_table(c), c.label());
    return t.done();
  });
  s.check("maximal_root", "enumerated maximal root matches the table and dominates all roots", true, [&] {
    Tally t;
    for (const auto& c : all) {
      const auto n = maximal_root(c);
      t(n == maximal_root_table(c), c.label());
      for (const auto& r : positive_roots(c))
        t(std::equal(r.begin(), r.end(), n.begin(), [](int x, int y) { return x <= y; }), c.label() + " dominance");
    }
    return t.done();
  });
  s.check("l0_exceptions", "no index with n_i = 1 exactly for E8, F4, G2 (rank <= 8)", true, [&] {
    Tally t;
    const std::set<std::string> exceptional{"E8", "F4", "G2"};
    for (const auto& c : all) {
      if (c.rank > 8) continue;
      t(l0_candidates(c).empty() == (exceptional.count(c.label()) > 0), c.label());
    }
    return t.done();
  });
  s.check("gradation", "k + p+ + p- = g and alpha_j(H) = 2 delta_j,l0", true, [&] {
    Tally t;
    for (const auto& c : all)
      for (int l0 : l0_candidates(c)) {
        const auto g = gradation(c, l0);
        const std::string tag = c.label() + " l0=" + std::to_string(l0);
        t(g.dim_p_plus == g.dim_p_minus, tag);
        t(g.dim_g == static_cast<std::size_t>(c.rank) + 2 * positive_roots(c).size(), tag + " dim g");
        for (int j = 0; j < c.rank; ++j) {
          Rational v = 0;
          for (int i = 0; i < c.rank; ++i) v += g.h[static_cast<std::size_t>(i)] * c.a(i, j);
          t(v == (j == l0 - 1 ? 2 : 0), tag + " H");
        }
      }
    return t.done();
  });
  s.check("weyl_vector", "half the sum of positive roots pairs to 1 with every simple coroot", true, [&] {
    Tally t;
    for (const auto& c : all) t(rho_and_check(c).half_sum_is_weyl_vector, c.label());
    return t.done();
  });
}

void uqsl2_suite(Suite& s) {
  auto samples = [&s](std::uint64_t salt) {
    RandomSource rnd(s.opts().seed + salt);
    std::vector<UqElement> xs{UqElement::E(), UqElement::F(), UqElement::K(1), UqElement::K(-1)};
    for (int i = 0; i < 20; ++i) xs.push_back(rnd.uq(4, 2));
    return xs;
  };
  s.check("relations", "KE = q^2 EK, KF = q^-2 FK, [E,F] = (K - K^-1)/(q - q^-1)", true, [] {
    Tally t;
    const UqElement e = UqElement::E(), f = UqElement::F(), k = UqElement::K(1), ki = UqElement::K(-1);
    const Scalar q = Scalar::q();
    t(k * e == Scalar::q_power(2) * (e * k), "KE");
    t(k * f == Scalar::q_power(-2) * (f * k), "KF");
    t(e * f - f * e == (q - q.inverse()).inverse() * (k - ki), "[E,F]");
    t(k * ki == UqElement::constant(1), "K K^-1");
    return t.done();
  });
  s.check("associativity", "PBW product is associative", true, [&s] {
    RandomSource rnd(s.opts().seed + 5);
    Tally t;
    for (int i = 0; i < 30; ++i) {
      const UqElement a = rnd.uq(3, 2), b = rnd.uq(3, 2), c = rnd.uq(3, 2);
      t((a * b) * c == a * (b * c), a.str());
    }
    return t.done();
  });
  s.check("coassociativity", "(Delta x id) Delta = (id x Delta) Delta", true, [&] {
    Tally t;
    for (const auto& x : samples(6)) {
      const Tensor d = comultiply(x);
      t(comultiply_leg(d, 0) == comultiply_leg(d, 1), x.str());
    }
    return t.done();
  });
  s.check("counit", "(eps x id) Delta = id = (id x eps) Delta", true, [&] {
    Tally t;
    auto eps = [](const UqElement& u) { return UqElement::constant(counit(u)); };
    for (const auto& x : samples(7)) {
      const Tensor d = comultiply(x);
      t(multiply_legs(map_leg(d, 0, eps)) == x, "left " + x.str());
      t(multiply_legs(map_leg(d, 1, eps)) == x, "right " + x.str());
    }
    return t.done();
  });
  s.check("antipode", "m(S x id) Delta = eps 1 = m(id x S) Delta", true, [&] {
    Tally t;
    auto sf = [](const UqElement& u) { return antipode(u); };
    for (const auto& x : samples(8)) {
      const Tensor d = comultiply(x);
      const UqElement unit = UqElement::constant(counit(x));
      t(multiply_legs(map_leg(d, 0, sf)) == unit, "left " + x.str());
      t(multiply_legs(map_leg(d, 1, sf)) == unit, "right " + x.str());
      t(antipode_inverse(antipode(x)) == x, "S^-1 S " + x.str());
    }
    return t.done();
  });
  s.check("comultiplication_is_algebra_map", "Delta(xy) = Delta(x) Delta(y)", true, [&] {
    Tally t;
    const auto xs = samples(9);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
      t(comultiply(xs[i] * xs[i + 1]) == comultiply(xs[i]) * comultiply(xs[i + 1]), xs[i].str());
    return t.done();
  });
  s.check("involution", "the star is involutive and antimultiplicative", true, [&] {
    Tally t;
    const auto xs = samples(10);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      t(involution(involution(xs[i])) == xs[i], "** " + xs[i].str());
      t(involution(xs[i] * xs[i + 1]) == involution(xs[i + 1]) * involution(xs[i]), "(xy)* " + xs[i].str());
    }
    return t.done();
  });
  s.check("verma_duality", "Delta(F^n)(v0 x v0) dualises to the polynomial product and the z-action", true, [] {
    const auto r = verma_duality_check(8);
    Outcome o{r.passed, static_cast<std::size_t>(r.N), {}};
    if (!r.failure.empty()) o.witnesses.push_back(r.failure);
    return o;
  });
}

void modalg_suite(Suite& s) {
  const int d = s.opts().degree;
  for (const char* name : {"holomorphic", "antiholomorphic", "laurent", "pol", "extended"})
    s.check(std::string("module_algebra_") + name, "xi(fg) = sum xi_(1)(f) xi_(2)(g), xi 1 = eps(xi) 1", true,
            [name, d] { return from_axioms(module_algebra_check(carrier_by_name(name), d)); });
  for (const char* name : {"pol", "extended"})
    s.check(std::string("star_compatibility_") + name, "(xi f)^* = (S(xi))^* f^*", true,
            [name, d] { return from_axioms(star_compat_check(carrier_by_name(name), d)); });
  s.check("antiholomorphic_action", "E z^* = q^(-3/2) and F z^* = -q^(5/2) z^*^2", true, [] {
    Tally t;
    const auto& c = pol_carrier();
    const NCExpr zs = NCExpr::letter(1);
    t(act(c, UqElement::E(), zs) == NCExpr::constant(Scalar::s_power(-3)), "E z^*");
    t(act(c, UqElement::F(), zs) == NCExpr::monomial({1, 1}, -Scalar::s_power(5)), "F z^*");
    return t.done();
  });
}

void rmatrix_suite(Suite& s) {
  s.check("braiding", "R-matrix braiding of z^* (x) z is q^2 z (x) z^* + (1 - q^2)", true, [] {
    Tally t;
    const WeightTensor in = WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1);
    WeightTensor want = WeightTensor::pure(Leg::Holomorphic, 1, Leg::Antiholomorphic, 1, Scalar::q_power(2));
    want.add_term(0, 0, Scalar(1) - Scalar::q_power(2));
    const WeightTensor got = braiding(in);
    t(got == want, got.str());
    return t.done();
  });
  s.check("derive_relations", "the braided commutation relation reproduces the presentation", true, [] {
    Tally t;
    t(same_presentation(derive_relations(), pol_cq()), "derived presentation differs");
    return t.done();
  });
}

void fock_suite(Suite& s) {
  const int big = s.opts().N;
  s.check("relation_off_boundary", "T(z^* z - q^2 z z^* - (1 - q^2)) = 0 away from the boundary", true, [big] {
    Tally t;
    const auto& p = pol_cq();
    const NCExpr rel = p.parse("z^* z - q^2 z z^* - (1 - q^2)");
    for (int n : {8, 32, 64, big}) t(represent(rel, p, n).zero_off_boundary(), "N = " + std::to_string(n));
    return t.done();
  });
  s.check("orthonormal_entries", "T(z) e_n = (1 - q^2(n+1))^(1/2) e_(n+1) numerically, tolerance 1e-12", false,
          [&s] {
            Tally t;
            const auto& p = pol_cq();
            const int n = 16;
            std::vector<double> qs{0.25, 0.5, 0.9, s.opts().q0.get_d()};
            for (double q0 : qs) {
              const Eigen::MatrixXd z = orthonormal_numeric(NCExpr::letter(0), p, n, q0);
              const Eigen::MatrixXd zs = orthonormal_numeric(NCExpr::letter(1), p, n, q0);
              for (int k = 0; k < n; ++k) {
                const double want = std::sqrt(1 - std::pow(q0, 2 * (k + 1)));
                t(std::abs(z(k + 1, k) - want) < 1e-12, "z at q0 = " + std::to_string(q0));
                t(std::abs(zs(k, k + 1) - want) < 1e-12, "z^* at q0 = " + std::to_string(q0));
              }
            }
            return t.done();
          });
  s.check("vacuum_uniqueness", "ker T(z^*) is one-dimensional", true, [big] {
    Tally t;
    for (int n = 1; n <= big; ++n) t(vacuum_vectors(n).cols() == 1, "N = " + std::to_string(n));
    return t.done();
  });
  s.check("faithfulness", "z^a z^*^b, a, b <= 3, are linearly independent at N = 8", true, [] {
    const auto r = faithfulness_check(3, 8);
    return Outcome{r.passed(), r.family_size,
                   {"rank " + std::to_string(r.rank) + " of " + std::to_string(r.family_size)}};
  });
  s.check("commutant", "the commutant of T(z), T(z^*) at N = 12 is the scalars", false, [] {
    Tally t;
    for (double q0 : {0.5, 0.9}) {
      const auto r = irreducibility_check(12, q0);
      t(r.commutant_dimension == 1, "dimension " + std::to_string(r.commutant_dimension) + " at q0 = " +
                                        std::to_string(q0));
    }
    return t.done();
  });
  s.check("adjointness", "<z E_m, E_n> = <E_m, z^* E_n>", true, [big] {
    const auto r = adjointness_check(big);
    Outcome o{r.passed(), r.checked, {}};
    for (const auto& [m, n] : r.failures) o.witnesses.push_back(std::to_string(m) + "," + std::to_string(n));
    return o;
  });
}

void integral_suite(Suite& s) {
  const int d = s.opts().degree;
  const int inv_bound = std::max(10, d);
  s.check("invariance", "nu(xi f) = eps(xi) nu(f) on z^a f0 z^*^b, a, b <= " + std::to_string(inv_bound), true,
          [inv_bound] {
            const auto r = invariance_check(inv_bound);
            return Outcome{r.passed(), r.checked, r.failures};
          });
  s.check("uniqueness", "invariant functionals form a line spanned by the q-trace", true, [d] {
    Tally t;
    for (int b = 2; b <= std::max(8, d); b += 2) {
      const auto r = uniqueness_solve(b);
      t(r.dimension == 1 && r.matches_integral,
        "bound " + std::to_string(b) + ": dimension " + std::to_string(r.dimension));
    }
    return t.done();
  });
  s.check("positivity", "the Gram form nu(g^* f) is positive definite", true, [&s, d] {
    Tally t;
    std::vector<Rational> qs{Rational(1, 4), Rational(9, 16), s.opts().q0};
    for (const auto& q0 : qs) {
      const auto r = positivity_check(std::min(d, 4), q0);
      t(r.positive_definite, "q0 = " + rational_str(q0) + ", min pivot " + rational_str(r.min_pivot));
    }
    return t.done();
  });
  s.check("sample_values", "nu(f0) = 1 and nu(z f0 z^*) = q^-2 - 1", true, [] {
    Tally t;
    t(integrate(FiniteFunction::basis(0, 0)) == Scalar(1), "f0");
    t(integrate(FiniteFunction::basis(1, 1)) == Scalar::q_power(-2) - Scalar(1), "z f0 z^*");
    return t.done();
  });
}

void flag_suite(Suite& s) {
  const int d = s.opts().degree;
  s.check("quasi_commutation", "y x = q^-2 x y, y w = q^2 w y", true, [] {
    Tally t;
    t(quasi_commute(Spherical::X) == Scalar::q_power(-2), quasi_commute(Spherical::X).str());
    t(quasi_commute(Spherical::Y) == Scalar(1), quasi_commute(Spherical::Y).str());
    t(quasi_commute(Spherical::W) == Scalar::q_power(2), quasi_commute(Spherical::W).str());
    return t.done();
  });
  s.check("ore_condition", "powers of y form a left and right Ore set", true, [&s] {
    const auto r = ore_check(40, s.opts().seed);
    Tally t;
    for (const auto& w : r.witnesses) t(w.verified, w.m + " against y^" + std::to_string(w.s_power));
    return t.done();
  });
  s.check("highest_weight", "E t11^2 = 0 and K t11^2 = q^2 t11^2", true, [] {
    Tally t;
    const NCExpr x = spherical_generator(Spherical::X);
    t(regular_act(UqElement::E(), x).is_zero(), "E x");
    t(regular_act(UqElement::K(1), x) == x * Scalar::q_power(2), "K x");
    return t.done();
  });
  s.check("spherical_dimensions", "the degree-n spherical component has dimension 2n + 1", true, [] {
    Tally t;
    for (int n = 0; n <= 8; ++n) {
      const auto dim = spherical_dimension(n);
      t(dim == static_cast<std::size_t>(2 * n + 1), "n = " + std::to_string(n) + ": " + std::to_string(dim));
    }
    return t.done();
  });
  s.check("no_zero_divisors", "products of nonzero spherical elements are nonzero", true,
          [&s] { return Outcome{no_zero_divisors(4, 40, s.opts().seed), 40, {}}; });
  s.check("omega", "Z Z' = 1 and degree-zero classes are powers of Z", true, [] {
    const auto r = omega_subalgebra(4);
    Tally t;
    t(r.z_times_zprime_is_one, "Z Z' != 1");
    for (const auto& e : r.entries)
      t(!e.scalar.is_zero(), "y^-" + std::to_string(e.j) + " x^" + std::to_string(e.a) + " y^" +
                                 std::to_string(e.b) + " w^" + std::to_string(e.c));
    return t.done();
  });
  s.check("module_algebra_c_sl2_q", "regular action is a module-algebra structure", true,
          [d] { return from_axioms(module_algebra_check(qsl2_carrier(), d)); });
  s.check("module_algebra_localized", "the extended action on the localisation is a module-algebra structure", true,
          [d] { return from_axioms(module_algebra_check(localized_carrier(), localized_basis(2, d / 2))); });
  s.check("laurent_action_match", "xi Z^n agrees with the q-difference action for |n| <= 6", true, [] {
    const auto r = laurent_action_match(6);
    Outcome o{r.passed(), r.rows.size(), {"normalisation " + r.normalization.str()}};
    if (!r.passed()) o.witnesses.push_back(r.failure);
    return o;
  });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"scalars", scalars_suite}, {"ncpoly", ncpoly_suite}, {"rootdata", rootdata_suite},
      {"uqsl2", uqsl2_suite},     {"modalg", modalg_suite}, {"rmatrix", rmatrix_suite},
      {"fock", fock_suite},       {"integral", integral_suite}, {"flag", flag_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry())
    if (name == suite) {
      Suite s(name, options);
      fn(s);
      return s.take();
    }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

VerifyReport run_verify(const std::vector<std::string>& selectors, const VerifyOptions& options) {
  if (selectors.empty()) throw std::invalid_argument("no suite selected");
  std::set<std::string> chosen;
  for (const auto& s : selectors) {
    if (s == "all") {
      chosen.insert(suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
      chosen.insert(s);
    } else {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  // Warm the shared static presentations and carriers before going parallel.
  (void)pol_cq();
  (void)qsl2_presentation();
  (void)extended();
  (void)localized_carrier();

  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& name : suite_names())
    if (chosen.count(name)) jobs.push_back(std::async(std::launch::async, run_suite, name, options));
  VerifyReport r;
  r.options = options;
  for (auto& j : jobs) {
    auto part = j.get();
    r.checks.insert(r.checks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return r;
}

}  // namespace qdisc
