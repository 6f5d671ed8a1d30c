// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qdisc/fock.hpp"
#include "qdisc/flag.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/modalg.hpp"
#include "qdisc/rmatrix.hpp"
#include "qdisc/rootdata.hpp"
#include "qdisc/uqsl2.hpp"

using namespace qdisc;

namespace {

constexpr double kNumericTolerance = 1e-12;
constexpr double kRelationSeconds = 1.0;
constexpr double kFockSeconds = 5.0;
constexpr double kModuleAlgebraSeconds = 30.0;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool relation_derivation(Outcome& o) {
  const auto b = braiding(WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1));
  WeightTensor want{Leg::Holomorphic, Leg::Antiholomorphic, {}};
  want.add_term(1, 1, Scalar::q_power(2));
  want.add_term(0, 0, Scalar(1) - Scalar::q_power(2));
  o.require(b == want, "braiding gave " + b.str());
  o.require(same_presentation(derive_relations(), pol_cq()), "derived presentation differs");
  return o.ok;
}

bool fock_relations(Outcome& o) {
  const auto& p = pol_cq();
  const NCExpr rel = p.parse("z^* z - q^2 z z^* - (1 - q^2)");
  for (int N : {8, 32, 64}) o.require(represent(rel, p, N).zero_off_boundary(), "relation fails at N = " + std::to_string(N));
  for (double q0 : {0.25, 0.5, 0.9}) {
    const auto zs = orthonormal_numeric(NCExpr::letter(1), p, 32, q0);
    const auto z = orthonormal_numeric(NCExpr::letter(0), p, 32, q0);
    for (int n = 1; n <= 32; ++n) {
      const double want = std::sqrt(1 - std::pow(q0, 2 * n));
      o.require(std::abs(zs(n - 1, n) - want) <= kNumericTolerance && std::abs(z(n, n - 1) - want) <= kNumericTolerance,
                "entry n = " + std::to_string(n) + " at q0 = " + std::to_string(q0));
    }
  }
  return o.ok;
}

bool vacuum(Outcome& o) {
  for (int N = 1; N <= 32; ++N) o.require(vacuum_vectors(N).cols() == 1, "N = " + std::to_string(N));
  return o.ok;
}

bool faithfulness(Outcome& o) {
  const auto f = faithfulness_check(3, 8);
  o.require(f.family_size == 16 && f.rank == 16, "rank " + std::to_string(f.rank));
  for (double q0 : {0.5, 0.9}) {
    const auto r = irreducibility_check(12, q0);
    o.require(r.commutant_dimension == 1, "commutant dimension " + std::to_string(r.commutant_dimension));
  }
  return o.ok;
}

bool module_algebra(Outcome& o) {
  auto note = [&o](const char* name, const AxiomReport& r) {
    o.require(r.passed(), std::string(name) + ": " + std::to_string(r.failures.size()) + " failures");
  };
  note("pol", module_algebra_check(pol_carrier(), 4));
  note("extended", module_algebra_check(extended(), 4));
  note("c_sl2_q", module_algebra_check(qsl2_carrier(), 4));
  note("localized", module_algebra_check(localized_carrier(), localized_basis(2, 2)));
  return o.ok;
}

bool integral(Outcome& o) {
  o.require(invariance_check(10).passed(), "invariance");
  for (int bound : {2, 4, 6, 8}) {
    const auto u = uniqueness_solve(bound);
    o.require(u.dimension == 1 && u.matches_integral, "uniqueness at bound " + std::to_string(bound));
  }
  for (const Rational q0 : {Rational(1, 4), Rational(9, 16)})
    o.require(positivity_check(4, q0).positive_definite, "positivity at q0 = " + q0.get_str());
  return o.ok;
}

bool localization(Outcome& o) {
  const Presentation& p = qsl2_presentation();
  const NCExpr y = spherical_generator(Spherical::Y);
  const Scalar want[] = {Scalar::q_power(-2), Scalar(1), Scalar::q_power(2)};
  int i = 0;
  for (Spherical g : {Spherical::X, Spherical::Y, Spherical::W}) {
    const NCExpr s = spherical_generator(g);
    o.require(quasi_commute(g) == want[i], "quasi-commutation scalar " + std::to_string(i));
    o.require(multiply(y, s, p) == multiply(s, y, p) * want[i], "rewrite oracle " + std::to_string(i));
    ++i;
  }
  o.require(z_power(1) * z_power(-1) == LocalizedElement::constant(1), "Z Z' != 1");
  for (int n = 0; n <= 8; ++n)
    o.require(spherical_dimension(n) == static_cast<std::size_t>(2 * n + 1), "dimension at n = " + std::to_string(n));
  const auto m = laurent_action_match(6);
  o.require(m.passed(), "Laurent match: " + m.failure);
  return o.ok;
}

bool root_data(Outcome& o) {
  for (char t : std::string("ABCDEFG"))
    for (int l = 1; l <= 8; ++l) {
      CartanData c;
      try {
        c = build(t, l);
      } catch (const RootDataError&) {
        continue;
      }
      const bool exceptional = c.label() == "E8" || c.label() == "F4" || c.label() == "G2";
      o.require(l0_candidates(c).empty() == exceptional, "l0 set for " + c.label());
      o.require(maximal_root(c) == maximal_root_table(c), "maximal root for " + c.label());
    }
  return o.ok;
}

bool verma(Outcome& o) {
  const auto r = verma_duality_check(8);
  o.require(r.passed, r.failure);
  return o.ok;
}

bool confluence(Outcome& o) {
  for (const Presentation* p : {&pol_cq(), &qsl2_presentation()}) {
    const auto r = check_local_confluence(*p, 6);
    o.require(r.confluent(), p->name() + " is not confluent");
  }
  return o.ok;
}

struct Criterion {
  const char* name;
  std::function<bool(Outcome&)> run;
  double limit_seconds;  // 0 for no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"relation derivation", relation_derivation, kRelationSeconds},
      {"Fock relations", fock_relations, kFockSeconds},
      {"vacuum uniqueness", vacuum, 0},
      {"faithfulness and commutant", faithfulness, 0},
      {"module-algebra axioms", module_algebra, kModuleAlgebraSeconds},
      {"invariant integral", integral, 0},
      {"localization chain", localization, 0},
      {"root data", root_data, 0},
      {"Verma duality", verma, 0},
      {"confluence", confluence, 0},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    if (!o.ok) ++failed;
    std::printf("%s %2d %-28s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs, o.ok ? "" : "  ",
                o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
