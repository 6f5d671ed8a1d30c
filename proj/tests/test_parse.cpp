#include <doctest.h>

#include "qdisc/flag.hpp"
#include "qdisc/modalg.hpp"
#include "qdisc/parse.hpp"
#include "qdisc/random.hpp"

using namespace qdisc;

TEST_CASE("words and stars") {
  const auto& p = pol_cq();
  CHECK(p.parse("z^* z") == NCExpr::monomial({1, 0}));
  CHECK(p.parse("z^2 z^*") == NCExpr::monomial({0, 0, 1}));
  CHECK(p.parse("(z z^*)^*") == NCExpr::monomial({0, 1}));
  CHECK(p.parse("(z^2)^*") == NCExpr::monomial({1, 1}));
  CHECK(p.parse_word("z z^* z") == Word{0, 1, 0});
}

TEST_CASE("scalars inside expressions") {
  const auto& p = pol_cq();
  const NCExpr e = p.parse("q^2 z z^* + 1 - q^2");
  CHECK(e.coeff({0, 1}) == Scalar::q_power(2));
  CHECK(e.constant_term() == Scalar(1) - Scalar::q_power(2));
  CHECK(p.parse("q^(1/2) z").coeff({0}) == Scalar::sqrt_q());
  CHECK(p.parse("q^(-3/2)") == NCExpr::constant(Scalar::s_power(-3)));
  CHECK(p.parse("z/(1 - q^2)").coeff({0}) == (Scalar(1) - Scalar::q_power(2)).inverse());
  CHECK(p.parse("3*z . z").coeff({0, 0}) == Scalar(3));
}

TEST_CASE("inverse generators") {
  const auto& p = laurent_cz();
  CHECK(p.parse("z^-2") == NCExpr::monomial({1, 1}));
  CHECK(p.format(NCExpr::monomial({1, 1, 1})) == "z^-3");
  CHECK(normal_form(p.parse("z^3 z^-2"), p) == NCExpr::letter(0));
}

TEST_CASE("U_q(sl2) expressions") {
  const UqElement x = UqElement::parse("E F - F E");
  const Scalar q = Scalar::q();
  CHECK(x == (q - q.inverse()).inverse() * (UqElement::K(1) - UqElement::K(-1)));
  CHECK(UqElement::parse("K^-1 K") == UqElement::constant(1));
  CHECK(UqElement::parse("K E") == Scalar::q_power(2) * UqElement::parse("E K"));
}

TEST_CASE("errors carry positions") {
  const auto& p = pol_cq();
  auto position = [&](const char* text) -> long {
    try {
      p.parse(text);
    } catch (const parse::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("z +") == 3);
  CHECK(position("(z z^*") == 6);
  CHECK(position("z # z") == 2);
  CHECK(position("w") == 0);
  CHECK(position("z^(1/2)") >= 0);
  CHECK(position("z^-1") >= 0);
  CHECK_THROWS_AS(p.parse_word("2 z"), parse::ParseError);
  CHECK_THROWS_AS(Scalar::parse("z"), parse::ParseError);
}

TEST_CASE("print then parse round trip") {
  RandomSource rnd(29);
  for (const Presentation* p : {&pol_cq(), &extended_pol_cq(), &qsl2_presentation(), &laurent_cz()})
    for (int i = 0; i < 40; ++i) {
      const NCExpr e = normal_form(rnd.expr(*p, 4), *p);
      CHECK(normal_form(p->parse(p->format(e)), *p) == e);
    }
  for (int i = 0; i < 40; ++i) {
    const UqElement x = rnd.uq(3);
    CHECK(UqElement::parse(x.str()) == x);
  }
}
