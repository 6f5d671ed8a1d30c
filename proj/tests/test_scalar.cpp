#include <doctest.h>

#include "qdisc/random.hpp"
#include "qdisc/scalar.hpp"

using namespace qdisc;

namespace {

const Scalar q = Scalar::q();

/// Oracle: evaluate a Laurent polynomial in s given as coefficients at s = s0.
Rational horner(const std::vector<long>& coeffs, int low, const Rational& s0) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * s0 + *it;
  Rational p = 1;
  for (int i = 0; i < std::abs(low); ++i) p *= s0;
  return low >= 0 ? Rational(v * p) : Rational(v / p);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(q * q == Scalar::q_power(2));
  CHECK((Scalar(1) - Scalar::q_power(2)).str() == "1 - q^2");
  CHECK(Scalar::sqrt_q() * Scalar::sqrt_q() == q);
  CHECK(Scalar::sqrt_q().str() == "q^(1/2)");
  CHECK(Scalar::s_power(-3).str() == "q^(-3/2)");
}

TEST_CASE("cancellation of a common factor") {
  const Scalar a = Scalar(1) - Scalar::q_power(2);
  const Scalar b = Scalar::q_power(-2) - Scalar(1);
  const Scalar r = a / b;
  // (1 - q^2) = q^2 (q^-2 - 1)
  CHECK(r == Scalar::q_power(2));
  CHECK(r * b == a);
  CHECK(r.denominator().is_one());
}

TEST_CASE("canonical printing") {
  CHECK(Scalar::parse("q^-1 + 3*q^2").str() == "q^-1 + 3*q^2");
  CHECK(Scalar::parse("1/(1 - q^2)").str() == "-1/(-1 + q^2)");
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(-7).str() == "-7");
  CHECK(Scalar::parse("(q^2 - 1)/(q - 1)") == q + Scalar(1));
}

TEST_CASE("q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == Scalar(1));
  CHECK(q_int(2) == q + q.inverse());
  CHECK(q_int(3) == Scalar::q_power(2) + Scalar(1) + Scalar::q_power(-2));
  CHECK(q_int(-2) == -q_int(2));
}

TEST_CASE("exact evaluation") {
  const Rational q0(1, 4);
  CHECK(eval_numeric(Scalar::q_power(2), q0) == Rational(1, 16));
  CHECK(eval_numeric(Scalar(1) - Scalar::q_power(2), q0) == Rational(15, 16));
  CHECK(eval_numeric(Scalar::sqrt_q(), q0) == Rational(1, 2));
  CHECK(to_double(Scalar::sqrt_q(), 0.25) == doctest::Approx(0.5));
  CHECK_THROWS_AS(eval_numeric(Scalar(1) / (Scalar(4) * q - Scalar(1)), Rational(1, 4)), PoleError);
}

TEST_CASE("evaluation matches Horner on Laurent polynomials") {
  RandomSource rnd(11);
  for (int i = 0; i < 50; ++i) {
    const int low = rnd.uniform(-4, 2);
    std::vector<long> c(static_cast<std::size_t>(rnd.uniform(1, 5)));
    Scalar a;
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = rnd.uniform(-5, 5);
      a += Scalar(c[k]) * Scalar::s_power(low + static_cast<int>(k));
    }
    // q0 = 9/16 so that s0 = 3/4 is rational.
    CHECK(eval_numeric(a, Rational(9, 16)) == horner(c, low, Rational(3, 4)));
  }
}

TEST_CASE("field axioms on random scalars") {
  RandomSource rnd(3);
  for (int i = 0; i < 80; ++i) {
    const Scalar a = rnd.scalar(), b = rnd.scalar(), c = rnd.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * a.inverse() == Scalar(1));
    CHECK((a / b) * b == a);
    CHECK(Scalar::parse(a.str()) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  RandomSource rnd(5);
  const Rational q0(4, 9);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Scalar a = rnd.scalar(), b = rnd.scalar();
    try {
      const Rational ea = eval_numeric(a, q0), eb = eval_numeric(b, q0);
      CHECK(eval_numeric(a * b, q0) == ea * eb);
      CHECK(eval_numeric(a + b, q0) == ea + eb);
      ++checked;
    } catch (const PoleError&) {
      // a random denominator vanished at q0
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / (q - q), DivisionByZero);
}
