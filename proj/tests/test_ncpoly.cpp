#include <doctest.h>

#include "qdisc/fock.hpp"
#include "qdisc/modalg.hpp"
#include "qdisc/ncpoly.hpp"
#include "qdisc/random.hpp"

using namespace qdisc;

namespace {

const Presentation& pol() { return pol_cq(); }
NCExpr nf(const std::string& text) { return normal_form(pol().parse(text), pol()); }
NCExpr z_pow(int n) { return NCExpr::monomial(power_word(0, n)); }

Presentation two_letters(const char* name) { return Presentation(name, {{"x", "x", {0}, 1}, {"y", "y", {0}, 1}}); }

}  // namespace

TEST_CASE("defining relation") {
  CHECK(pol().format(nf("z^* z")) == "q^2 z z^* + 1 - q^2");
  CHECK(nf("1") == NCExpr::constant(1));
  CHECK(nf("z^* z - q^2 z z^* - (1 - q^2)").is_zero());
  // a = (1 - q^2)^(-1/2) z^*, a^+ = (1 - q^2)^(-1/2) z: a a^+ - q^2 a^+ a = 1 after clearing the scalar.
  CHECK(nf("z^* z - q^2 z z^*") == NCExpr::constant(Scalar(1) - Scalar::q_power(2)));
}

TEST_CASE("y = 1 - z z^* quasi-commutes with z and z^*") {
  CHECK(nf("z (1 - z z^*) - q^-2 (1 - z z^*) z").is_zero());
  CHECK(nf("z^* (1 - z z^*) - q^2 (1 - z z^*) z^*").is_zero());
}

TEST_CASE("closed form for z^* z^n") {
  const NCExpr zs = NCExpr::letter(1);
  for (int n = 1; n <= 7; ++n) {
    const Scalar q2n = Scalar::q_power(2 * n);
    const NCExpr want = z_pow(n) * zs * q2n + z_pow(n - 1) * (Scalar(1) - q2n);
    CHECK(multiply(zs, z_pow(n), pol()) == want);
  }
}

TEST_CASE("star") {
  const auto& p = pol();
  CHECK(star(NCExpr::letter(0), p) == NCExpr::letter(1));
  CHECK(star(p.parse("z z^*"), p) == p.parse("z z^*"));
  const NCExpr r = nf("z^* z");
  CHECK(normal_form(star(r, p), p) == r);
}

TEST_CASE("confluence") {
  SUBCASE("pol_c_q has no ambiguities beyond degree 2") {
    const auto r = check_local_confluence(pol(), 6);
    CHECK(r.confluent());
    CHECK(r.ambiguities.empty());
  }
  SUBCASE("inverse pair") {
    Presentation p = two_letters("inverse_pair");
    p.add_rule("x y", "1");
    p.add_rule("y x", "1");
    const auto r = check_local_confluence(p, 4);
    CHECK(r.confluent());
    CHECK(r.ambiguities.size() >= 2);
  }
  SUBCASE("broken fixture reports the overlap x y x") {
    Presentation p = two_letters("broken");
    p.add_rule("x y", "x");
    p.add_rule("y x", "y");
    const auto r = check_local_confluence(p, 4);
    CHECK_FALSE(r.confluent());
    bool found = false;
    for (const auto& a : r.ambiguities)
      if (!a.resolved && p.format_word(a.word) == "x y x") found = true;
    CHECK(found);
  }
}

TEST_CASE("rules must decrease the order") {
  Presentation p = two_letters("bad");
  CHECK_THROWS_AS(p.add_rule("x", "x y"), PresentationError);
}

TEST_CASE("rewrite budget") {
  Presentation p = two_letters("slow");
  p.add_rule("y x", "x y");
  NCExpr e = NCExpr::monomial(Word(40, 1)) * NCExpr::monomial(Word(40, 0));
  CHECK_THROWS_AS(normal_form(e, p, 100), RewriteBudgetExceeded);
  CHECK(normal_form(e, p).size() == 1);
}

TEST_CASE("grading") {
  const std::vector<int> deg{1, -1};
  const auto g1 = grade(z_pow(2), deg);
  CHECK(g1.size() == 1);
  CHECK(g1.at(2) == z_pow(2));
  const auto g2 = grade(pol().parse("z + z z^*"), deg);
  CHECK(g2.at(1) == NCExpr::letter(0));
  CHECK(g2.at(0) == pol().parse("z z^*"));
  const auto g3 = grade(nf("z^* z"), deg);
  CHECK(g3.size() == 1);
  CHECK(g3.at(0) == nf("z^* z"));
}

TEST_CASE("normal words are z^a z^*^b") {
  const auto words = normal_words(pol(), 6);
  CHECK(words.size() == 28);
  for (const auto& w : words) CHECK(std::is_sorted(w.begin(), w.end()));
}

TEST_CASE("normal form properties on random expressions") {
  RandomSource rnd(17);
  const auto& p = pol();
  for (int i = 0; i < 60; ++i) {
    const NCExpr a = rnd.expr(p, 5), b = rnd.expr(p, 4);
    const Scalar c = rnd.small_scalar();
    const NCExpr na = normal_form(a, p);
    CHECK(normal_form(na, p) == na);
    CHECK(normal_form(a * c + b, p) == na * c + normal_form(b, p));
    CHECK(normal_form(star(star(a, p), p), p) == na);
    CHECK(normal_form(star(a * b, p), p) == normal_form(star(b, p) * star(a, p), p));
    CHECK(normal_form(p.parse(p.format(na)), p) == na);
  }
}

TEST_CASE("rewriting agrees with the Fock representation") {
  // The representation applies letters to basis vectors directly, so it is
  // an oracle independent of the rewrite rules.
  RandomSource rnd(23);
  const auto& p = pol();
  for (int i = 0; i < 30; ++i) {
    const NCExpr a = rnd.expr(p, 5);
    const FockMatrix raw = represent(a, p, 12);
    const FockMatrix red = represent(normal_form(a, p), p, 12);
    for (int j = 0; j <= 12; ++j) {
      if (raw.is_boundary(j) || red.is_boundary(j)) continue;
      CHECK(raw.m.col(j) == red.m.col(j));
    }
  }
}

TEST_CASE("extended algebra rules") {
  const auto& p = extended_pol_cq();
  auto n = [&](const char* t) { return normal_form(p.parse(t), p); };
  CHECK(n("f0 f0") == p.parse("f0"));
  CHECK(n("f0 z").is_zero());
  CHECK(n("z^* f0").is_zero());
  CHECK(check_local_confluence(p, 6).confluent());
}
