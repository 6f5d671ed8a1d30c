#include <doctest.h>

#include <cmath>

#include "qdisc/fock.hpp"
#include "qdisc/modalg.hpp"

using namespace qdisc;

namespace {

const Presentation& pol() { return pol_cq(); }

}  // namespace

TEST_CASE("weights g_n") {
  CHECK(fock_weight(0) == Scalar(1));
  CHECK(fock_weight(1) == Scalar(1) - Scalar::q_power(2));
  CHECK(fock_weight(3) == fock_weight(2) * (Scalar(1) - Scalar::q_power(6)));
}

TEST_CASE("generators on the weighted basis") {
  const auto z = represent(NCExpr::letter(0), pol(), 6);
  const auto zs = represent(NCExpr::letter(1), pol(), 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(z.m(n + 1, n) == Scalar(1));
    CHECK(zs.m(n, n + 1) == Scalar(1) - Scalar::q_power(2 * (n + 1)));
  }
  CHECK(z.is_boundary(6));
  CHECK_FALSE(z.is_boundary(5));
  CHECK_FALSE(zs.is_boundary(0));
  const auto f0 = represent(NCExpr::letter(2), extended_pol_cq(), 4);
  CHECK(f0.m(0, 0) == Scalar(1));
  CHECK(f0.m(1, 1).is_zero());
}

TEST_CASE("the defining relation holds off the boundary") {
  for (int N : {4, 16, 40}) {
    const auto r = represent(pol().parse("z^* z - q^2 z z^* - (1 - q^2)"), pol(), N);
    CHECK(r.zero_off_boundary());
  }
  CHECK(represent(extended_pol_cq().parse("f0 f0 - f0"), extended_pol_cq(), 10).zero_off_boundary());
  CHECK(required_truncation(pol().parse("z^3 z^*")) >= 2);
}

TEST_CASE("orthonormal entries agree with sqrt(1 - q^2n)") {
  for (double q0 : {0.25, 0.5, 0.9}) {
    const auto zs = orthonormal_numeric(NCExpr::letter(1), pol(), 20, q0);
    const auto z = orthonormal_numeric(NCExpr::letter(0), pol(), 20, q0);
    for (int n = 1; n <= 20; ++n) {
      const double want = std::sqrt(1 - std::pow(q0, 2 * n));
      CHECK(zs(n - 1, n) == doctest::Approx(want).epsilon(1e-12));
      CHECK(z(n, n - 1) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  const auto zs = orthonormal_numeric(NCExpr::letter(1), pol(), 3, 0.25);
  CHECK(zs(0, 1) == doctest::Approx(std::sqrt(15.0) / 4));
}

TEST_CASE("vacuum is one-dimensional") {
  for (int N = 1; N <= 12; ++N) {
    const auto v = vacuum_vectors(N);
    CHECK(v.cols() == 1);
    CHECK_FALSE(v(0, 0).is_zero());
    for (int i = 1; i <= N; ++i) CHECK(v(i, 0).is_zero());
  }
}

TEST_CASE("faithfulness on z^a z^*^b") {
  const auto r = faithfulness_check(3, 8);
  CHECK(r.family_size == 16);
  CHECK(r.rank == 16);
  CHECK(r.passed());
}

TEST_CASE("commutant is the scalars") {
  for (double q0 : {0.5, 0.9}) {
    const auto r = irreducibility_check(12, q0);
    CHECK(r.commutant_dimension == 1);
  }
}

TEST_CASE("z and z^* are adjoint") {
  const auto r = adjointness_check(16);
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

TEST_CASE("string conversion") {
  const auto s = to_strings(represent(NCExpr::letter(1), pol(), 2).m);
  CHECK(s.at(0).at(1) == "1 - q^2");
  CHECK(s.at(1).at(0) == "0");
}
