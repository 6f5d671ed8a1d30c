#include <doctest.h>

#include <algorithm>
#include <set>

#include "qdisc/rootdata.hpp"

using namespace qdisc;

namespace {

std::vector<CartanData> all_types() {
  std::vector<CartanData> out;
  for (char t : std::string("ABCDEFG"))
    for (int l = 1; l <= 12; ++l) try {
        out.push_back(build(t, l));
      } catch (const RootDataError&) {
      }
  return out;
}

/// Oracle: closure of the simple roots under simple reflections
/// s_i(beta) = beta - alpha_i^vee(beta) alpha_i; keeps the positive ones.
std::set<RootVector> reflection_closure(const CartanData& c) {
  const int l = c.rank;
  std::set<RootVector> seen;
  std::vector<RootVector> todo;
  for (int i = 0; i < l; ++i) {
    RootVector r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(i)] = 1;
    todo.push_back(r);
    seen.insert(r);
  }
  while (!todo.empty()) {
    const RootVector b = todo.back();
    todo.pop_back();
    for (int i = 0; i < l; ++i) {
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += c.a(i, j) * b[static_cast<std::size_t>(j)];
      RootVector r = b;
      r[static_cast<std::size_t>(i)] -= pairing;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  std::set<RootVector> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.insert(r);
  return pos;
}

}  // namespace

TEST_CASE("Cartan matrices") {
  const auto a1 = build('A', 1);
  CHECK(a1.a(0, 0) == 2);
  CHECK(a1.d == std::vector<int>{1});
  const auto a2 = build('A', 2);
  CHECK(a2.a(0, 1) == -1);
  CHECK(a2.a(1, 0) == -1);
  CHECK(a2.d == std::vector<int>{1, 1});
  const auto g2 = build("G2");
  CHECK(std::min(g2.a(0, 1), g2.a(1, 0)) == -3);
  CHECK(std::max(g2.a(0, 1), g2.a(1, 0)) == -1);
  CHECK(g2.d == std::vector<int>{1, 3});
  CHECK(g2.d[0] * g2.a(0, 1) == g2.d[1] * g2.a(1, 0));
  for (const auto& c : all_types()) CHECK_MESSAGE(is_valid(c), c.label());
}

TEST_CASE("invalid types") {
  CHECK_THROWS_AS(build('E', 5), RootDataError);
  CHECK_THROWS_AS(build('D', 3), RootDataError);
  CHECK_THROWS_AS(build('A', 0), RootDataError);
  CHECK_THROWS_AS(build('H', 3), RootDataError);
  CHECK_THROWS_AS(build("A"), RootDataError);
  CHECK_THROWS_AS(build("Ax"), RootDataError);
  CHECK_THROWS_AS(gradation(build('G', 2), 1), RootDataError);
}

TEST_CASE("maximal roots") {
  CHECK(maximal_root(build('A', 1)) == RootVector{1});
  CHECK(maximal_root(build('A', 2)) == RootVector{1, 1});
  CHECK(maximal_root(build('C', 3)) == RootVector{2, 2, 1});
  CHECK(maximal_root(build('G', 2)) == RootVector{3, 2});
  for (const auto& c : all_types()) CHECK_MESSAGE(maximal_root(c) == maximal_root_table(c), c.label());
}

TEST_CASE("root enumeration agrees with the reflection closure") {
  for (const auto& c : all_types()) {
    if (c.rank > 8) continue;
    const auto roots = positive_roots(c);
    CHECK_MESSAGE(std::set<RootVector>(roots.begin(), roots.end()) == reflection_closure(c), c.label());
    CHECK_MESSAGE(roots.size() == positive_root_count_table(c), c.label());
  }
}

TEST_CASE("admissible l0") {
  CHECK(l0_candidates(build("E8")).empty());
  CHECK(l0_candidates(build("F4")).empty());
  CHECK(l0_candidates(build("G2")).empty());
  CHECK(l0_candidates(build('A', 5)) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(l0_candidates(build('E', 6)) == std::vector<int>{1, 6});
  CHECK(l0_candidates(build('E', 7)) == std::vector<int>{7});
  CHECK(l0_candidates(build('D', 5)) == std::vector<int>{1, 4, 5});
  for (const auto& c : all_types()) {
    const auto n = maximal_root(c);
    for (int i : l0_candidates(c)) CHECK(n[static_cast<std::size_t>(i - 1)] == 1);
  }
}

TEST_CASE("gradations") {
  const auto a1 = gradation(build('A', 1), 1);
  CHECK(a1.dim_p_plus == 1);
  CHECK(a1.dim_k == 1);
  CHECK(a1.dim_g == 3);
  CHECK(gradation(build('A', 2), 1).dim_p_plus == 2);
  CHECK(gradation(build('C', 2), 2).dim_p_plus == 3);
  // A_l, l0 = k: p+ is the k x (l + 1 - k) block.
  for (int l = 1; l <= 6; ++l)
    for (int k = 1; k <= l; ++k) CHECK(gradation(build('A', l), k).dim_p_plus == static_cast<std::size_t>(k * (l + 1 - k)));
  const auto a2 = gradation(build('A', 2), 1);
  CHECK(a2.h == std::vector<Rational>{Rational(4, 3), Rational(2, 3)});
  for (const auto& c : all_types())
    for (int l0 : l0_candidates(c)) {
      const auto g = gradation(c, l0);
      CHECK(g.dim_k + g.dim_p_plus + g.dim_p_minus == g.dim_g);
      CHECK(g.dim_g == static_cast<std::size_t>(c.rank) + 2 * positive_roots(c).size());
    }
}

TEST_CASE("rho") {
  const auto a1 = rho_and_check(build('A', 1));
  CHECK(a1.rho_check == std::vector<Rational>{Rational(1, 2)});
  const auto a2 = rho_and_check(build('A', 2));
  CHECK(a2.rho_check == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(a2.half_sum == std::vector<Rational>{Rational(1), Rational(1)});
  const auto b2 = rho_and_check(build('B', 2));
  CHECK(b2.half_sum == std::vector<Rational>{Rational(3, 2), Rational(2)});
  // For B2 the two readings of rho differ.
  CHECK(b2.half_sum != b2.displayed);
  for (const auto& c : all_types()) CHECK(rho_and_check(c).half_sum_is_weyl_vector);
}
