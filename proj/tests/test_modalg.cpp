#include <doctest.h>

#include "qdisc/modalg.hpp"
#include "qdisc/qdiff.hpp"
#include "qdisc/random.hpp"

using namespace qdisc;

namespace {

NCExpr z_pow(int n) { return NCExpr::monomial(power_word(0, n)); }

/// z^n in the Laurent presentation, negative powers through the letter z^-1.
NCExpr laurent_pow(int n) { return NCExpr::monomial(power_word(n >= 0 ? 0 : 1, std::abs(n))); }

}  // namespace

TEST_CASE("generator actions on z and z^*") {
  const auto& h = holomorphic();
  CHECK(act(h, UqElement::E(), z_pow(1)) == z_pow(2) * -Scalar::sqrt_q());
  CHECK(act(h, UqElement::F(), z_pow(1)) == NCExpr::constant(Scalar::sqrt_q()));
  CHECK(act(h, UqElement::K(), z_pow(1)) == z_pow(1) * Scalar::q_power(2));
  const auto& a = antiholomorphic();
  const NCExpr zs = NCExpr::letter(0);
  CHECK(act(a, UqElement::E(), zs) == NCExpr::constant(Scalar::s_power(-3)));
  CHECK(act(a, UqElement::F(), zs) == zs * zs * -Scalar::s_power(5));
  CHECK(act(a, UqElement::K(), zs) == zs * Scalar::q_power(-2));
  const auto& p = pol_carrier();
  CHECK(act(p, UqElement::E(), p.presentation().parse("z^*")) == NCExpr::constant(Scalar::s_power(-3)));
}

TEST_CASE("holomorphic action matches the q-difference operators") {
  const auto& h = holomorphic();
  for (int n = 0; n <= 8; ++n) {
    CHECK(act(h, UqElement::E(), z_pow(n)) == z_pow(n + 1) * qdiff_E(n));
    if (n > 0) CHECK(act(h, UqElement::F(), z_pow(n)) == z_pow(n - 1) * qdiff_F(n));
    CHECK(act(h, UqElement::K(-1), z_pow(n)) == z_pow(n) * qdiff_K(n, -1));
  }
  CHECK(act(h, UqElement::F(), NCExpr::constant(1)).is_zero());
}

TEST_CASE("Laurent action matches the q-difference operators") {
  const auto& l = laurent();
  const auto& p = l.presentation();
  for (int n = -6; n <= 6; ++n) {
    CHECK(act(l, UqElement::E(), laurent_pow(n)) == normal_form(laurent_pow(n + 1) * qdiff_E(n), p));
    CHECK(act(l, UqElement::F(), laurent_pow(n)) == normal_form(laurent_pow(n - 1) * qdiff_F(n), p));
    CHECK(act(l, UqElement::K(), laurent_pow(n)) == laurent_pow(n) * qdiff_K(n));
  }
}

TEST_CASE("carriers are module algebras") {
  for (const char* name : {"holomorphic", "antiholomorphic", "laurent", "pol", "extended"}) {
    const auto r = module_algebra_check(carrier_by_name(name), 3);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.checked > 0);
    CHECK_MESSAGE(relation_ideal_check(carrier_by_name(name)).passed(), name);
  }
  CHECK_THROWS(carrier_by_name("nope"));
}

TEST_CASE("star compatibility") {
  CHECK(star_compat_check(pol_carrier(), 3).passed());
  CHECK(star_compat_check(extended(), 3).passed());
}

TEST_CASE("the action is a representation on random elements") {
  RandomSource rnd(53);
  const auto& p = pol_carrier();
  for (int i = 0; i < 20; ++i) {
    const UqElement x = rnd.uq(2, 2), y = rnd.uq(2, 2);
    const NCExpr f = normal_form(rnd.expr(p.presentation(), 3), p.presentation());
    CHECK(act(p, x * y, f) == act(p, x, act(p, y, f)));
    // linearity in the element
    const NCExpr g = normal_form(rnd.expr(p.presentation(), 3), p.presentation());
    CHECK(act(p, x, f + g) == act(p, x, f) + act(p, x, g));
  }
}

TEST_CASE("weight decomposition") {
  const auto& p = pol_carrier();
  const auto w = weights(p.presentation().parse("z + z z^* + 2 z^*"), p);
  CHECK(w.size() == 3);
  CHECK(w.at(2) == NCExpr::letter(0));
  CHECK(w.at(-2) == NCExpr::letter(1) * Scalar(2));
  for (const auto& [k, f] : w) CHECK(act(p, UqElement::K(), f) == f * Scalar::q_power(k));
}
