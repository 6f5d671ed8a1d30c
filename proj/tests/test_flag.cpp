#include <doctest.h>

#include "qdisc/flag.hpp"
#include "qdisc/random.hpp"

using namespace qdisc;

namespace {

const Presentation& sl2() { return qsl2_presentation(); }
NCExpr nf(const char* text) { return normal_form(sl2().parse(text), sl2()); }
NCExpr mul(const NCExpr& a, const NCExpr& b) { return multiply(a, b, sl2()); }

}  // namespace

TEST_CASE("C[SL2]_q presentation") {
  CHECK(check_local_confluence(sl2(), 6).confluent());
  CHECK(sl2().size() == 4);
  // q-determinant
  CHECK(nf("t11 t22 - q t12 t21") == NCExpr::constant(1));
}

TEST_CASE("regular action on the matrix entries") {
  const UqElement E = UqElement::E(), F = UqElement::F(), K = UqElement::K();
  CHECK(regular_act(E, nf("t12")) == nf("t11"));
  CHECK(regular_act(E, nf("t22")) == nf("t21"));
  CHECK(regular_act(E, nf("t11")).is_zero());
  CHECK(regular_act(F, nf("t11")) == nf("t12"));
  CHECK(regular_act(F, nf("t21")) == nf("t22"));
  CHECK(regular_act(K, nf("t11")) == nf("t11") * Scalar::q());
  CHECK(regular_act(K, nf("t12")) == nf("t12") * Scalar::q().inverse());
  // The q-determinant is invariant.
  const NCExpr det = sl2().parse("t11 t22 - q t12 t21");
  CHECK(regular_act(E, det).is_zero());
  CHECK(regular_act(F, det).is_zero());
}

TEST_CASE("spherical generators quasi-commute with y") {
  const NCExpr y = spherical_generator(Spherical::Y);
  for (Spherical g : {Spherical::X, Spherical::Y, Spherical::W}) {
    const NCExpr s = spherical_generator(g);
    CHECK(mul(y, s) == mul(s, y) * quasi_commute(g));
  }
  CHECK(quasi_commute(Spherical::Y) == Scalar(1));
  CHECK(quasi_commute(Spherical::X) * quasi_commute(Spherical::W) == Scalar(1));
}

TEST_CASE("x is a highest weight vector") {
  const NCExpr x = spherical_generator(Spherical::X);
  CHECK(regular_act(UqElement::E(), x).is_zero());
  CHECK(regular_act(UqElement::K(), x) == x * Scalar::q_power(2));
  CHECK_FALSE(regular_act(UqElement::E(), spherical_generator(Spherical::Y)).is_zero());
}

TEST_CASE("Ore condition") {
  const auto r = ore_check(20, 3);
  CHECK(r.passed());
  CHECK(r.witnesses.size() == 20);
  for (const auto& w : r.witnesses) CHECK(w.right_scalar * w.left_scalar == Scalar(1));
}

TEST_CASE("spherical dimensions") {
  for (int n = 0; n <= 5; ++n) CHECK(spherical_dimension(n) == static_cast<std::size_t>(2 * n + 1));
}

TEST_CASE("no zero divisors") { CHECK(no_zero_divisors(3, 20, 5)); }

TEST_CASE("localized elements") {
  const LocalizedElement one = LocalizedElement::constant(1);
  const LocalizedElement y = localize(spherical_generator(Spherical::Y));
  CHECK(LocalizedElement::y_inverse() * y == one);
  CHECK(y * LocalizedElement::y_inverse() == one);
  CHECK(LocalizedElement::y_inverse(2) * y == LocalizedElement::y_inverse());
  CHECK(z_power(1) * z_power(-1) == one);
  CHECK(z_power(-1) * z_power(1) == one);
  CHECK(z_power(2) == z_power(1) * z_power(1));
  for (int n = -3; n <= 3; ++n) CHECK(z_power(n).degree() == std::optional<int>(0));
}

TEST_CASE("degree is additive") {
  const auto basis = localized_basis(2, 2);
  CHECK(basis.size() == 19);
  RandomSource rnd(71);
  for (int i = 0; i < 40; ++i) {
    const auto& a = basis[static_cast<std::size_t>(rnd.uniform(0, 18))];
    const auto& b = basis[static_cast<std::size_t>(rnd.uniform(0, 18))];
    const auto& c = basis[static_cast<std::size_t>(rnd.uniform(0, 18))];
    const auto ab = a * b;
    if (a.degree() && b.degree() && !ab.is_zero()) CHECK(ab.degree() == *a.degree() + *b.degree());
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("action on Z") {
  const LocalizedElement ez = localize_act(UqElement::E(), z_power(1));
  CHECK(ez.j() == 2);
  CHECK(ez.numerator() == NCExpr::monomial({0, 0, 0, 0}, -Scalar::q().inverse()));
  CHECK(localize_act(UqElement::K(), z_power(1)) == z_power(1) * LocalizedElement::constant(Scalar::q_power(2)));
}

TEST_CASE("degree-zero part is Laurent in Z") {
  const auto r = omega_subalgebra(3);
  CHECK(r.z_times_zprime_is_one);
  CHECK(r.all_laurent);
  CHECK_FALSE(r.entries.empty());
}

TEST_CASE("action on C[Omega]_q matches the Laurent action") {
  const auto r = laurent_action_match(6);
  CHECK(r.passed());
  CHECK(r.normalization == Scalar::sqrt_q());
  for (const auto& row : r.rows) CHECK(row.ok);
}

TEST_CASE("module algebra checks") {
  CHECK(module_algebra_check(qsl2_carrier(), 2).passed());
  const auto r = module_algebra_check(localized_carrier(), localized_basis(1, 1));
  CHECK(r.passed());
  CHECK(r.checked > 0);
}
