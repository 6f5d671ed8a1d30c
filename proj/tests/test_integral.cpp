#include <doctest.h>

#include "qdisc/integral.hpp"
#include "qdisc/random.hpp"

using namespace qdisc;

namespace {

/// Oracle from the trace: T(z^a f0 z*^b) sends E_b to g_b E_a and kills the rest.
Scalar nu_oracle(int a, int b) {
  if (a != b) return Scalar(0);
  Scalar out = Scalar::q_power(-2 * a);
  for (int k = 1; k <= a; ++k) out *= Scalar(1) - Scalar::q_power(2 * k);
  return out;
}

FiniteFunction random_ff(RandomSource& rnd, int bound) {
  FiniteFunction f;
  const int n = rnd.uniform(1, 3);
  for (int i = 0; i < n; ++i) f.add_term(rnd.uniform(0, bound), rnd.uniform(0, bound), rnd.small_scalar());
  return f;
}

}  // namespace

TEST_CASE("integral of basis functions") {
  CHECK(integrate(FiniteFunction::basis(0, 0)) == Scalar(1));
  CHECK(integrate(FiniteFunction::basis(1, 1)) == Scalar::q_power(-2) - Scalar(1));
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) CHECK(integrate(FiniteFunction::basis(a, b)) == nu_oracle(a, b));
}

TEST_CASE("conversion from expressions") {
  const auto& p = extended_pol_cq();
  const auto f = FiniteFunction::from_expr(p.parse("z f0 z^* + 3 f0"));
  CHECK(f.coeff(1, 1) == Scalar(1));
  CHECK(f.coeff(0, 0) == Scalar(3));
  // z^* f0 = 0 and f0 z = 0 collapse these.
  CHECK(FiniteFunction::from_expr(p.parse("z^* f0 + f0 z")).is_zero());
  // f0 z^* z f0 = (1 - q^2) f0 . 1 + q^2 f0 z z^* f0 = (1 - q^2) f0
  CHECK(FiniteFunction::from_expr(p.parse("f0 z^* z f0")) == FiniteFunction::basis(0, 0, Scalar(1) - Scalar::q_power(2)));
  CHECK_THROWS_AS(FiniteFunction::from_expr(p.parse("z")), NotFiniteError);
  CHECK_THROWS_AS(FiniteFunction::from_expr(p.parse("1 + f0")), NotFiniteError);
  CHECK(FiniteFunction::from_expr(f.to_expr()) == f);
}

TEST_CASE("products of finite functions") {
  // Oracle: f0 z*^b z^c f0 = delta_bc g_b f0.
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 4; ++c) {
      const auto prod = multiply_ff(FiniteFunction::basis(2, b), FiniteFunction::basis(c, 1));
      const Scalar g = b == c ? Scalar::q_power(2 * b) * nu_oracle(b, b) : Scalar(0);
      CHECK(prod == (g.is_zero() ? FiniteFunction() : FiniteFunction::basis(2, 1, g)));
    }
}

TEST_CASE("star") {
  CHECK(FiniteFunction::basis(2, 1, Scalar::q()).star() == FiniteFunction::basis(1, 2, Scalar::q()));
}

TEST_CASE("action agrees with the extended carrier") {
  RandomSource rnd(61);
  const auto& p = extended_pol_cq();
  for (int i = 0; i < 20; ++i) {
    const FiniteFunction f = random_ff(rnd, 3);
    const UqElement x = rnd.uq(2, 2);
    CHECK(normal_form(act(x, f).to_expr(), p) == act(extended(), x, normal_form(f.to_expr(), p)));
  }
}

TEST_CASE("invariance") {
  const auto r = invariance_check(6);
  CHECK(r.passed());
  CHECK(r.checked > 0);
  RandomSource rnd(67);
  for (int i = 0; i < 30; ++i) {
    const FiniteFunction f = random_ff(rnd, 4);
    const UqElement x = rnd.uq(3, 2);
    CHECK(integrate(act(x, f)) == counit(x) * integrate(f));
  }
}

TEST_CASE("uniqueness") {
  for (int bound : {2, 4, 6}) {
    const auto r = uniqueness_solve(bound);
    CHECK(r.dimension == 1);
    CHECK(r.matches_integral);
    CHECK(r.solution.at({0, 0}) == Scalar(1));
  }
}

TEST_CASE("positivity") {
  for (const Rational q0 : {Rational(1, 4), Rational(9, 16)}) {
    const auto r = positivity_check(3, q0);
    CHECK(r.positive_definite);
    CHECK(r.min_pivot > 0);
    CHECK(r.size == 16);
  }
  // Gram entries come from the trace oracle.
  const auto g = gram_matrix(1);
  CHECK(g.rows() == 4);
}
