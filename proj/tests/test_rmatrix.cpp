#include <doctest.h>

#include "qdisc/modalg.hpp"
#include "qdisc/rmatrix.hpp"

using namespace qdisc;

namespace {

const Scalar q = Scalar::q();

}  // namespace

TEST_CASE("leg weights") {
  CHECK(leg_weight(Leg::Holomorphic, 3) == 6);
  CHECK(leg_weight(Leg::Antiholomorphic, 2) == -4);
}

TEST_CASE("Cartan factor") {
  const auto t = WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1);
  // -(-2)(2)/2 = 2
  CHECK(cartan_factor(t) == WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1, Scalar::q_power(2)));
  const auto u = WeightTensor::pure(Leg::Antiholomorphic, 0, Leg::Holomorphic, 5);
  CHECK(cartan_factor(u) == u);
}

TEST_CASE("E (x) F lowers both legs") {
  const auto t = WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1);
  // E z^* = q^(-3/2), F z = q^(1/2)
  CHECK(apply_ef(t, 1) == WeightTensor::pure(Leg::Antiholomorphic, 0, Leg::Holomorphic, 0, q.inverse()));
  CHECK(apply_ef(t, 2).terms.empty());
}

TEST_CASE("braiding of z^* (x) z") {
  const auto b = braiding(WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1));
  CHECK(b.left == Leg::Holomorphic);
  CHECK(b.right == Leg::Antiholomorphic);
  WeightTensor want{Leg::Holomorphic, Leg::Antiholomorphic, {}};
  want.add_term(1, 1, Scalar::q_power(2));
  want.add_term(0, 0, Scalar(1) - Scalar::q_power(2));
  CHECK(b == want);
}

TEST_CASE("truncation") {
  CHECK_THROWS_AS(r_apply(WeightTensor::pure(Leg::Antiholomorphic, 2, Leg::Holomorphic, 2)), TruncationError);
  CHECK_THROWS_AS(r_apply(WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1), 0), TruncationError);
  CHECK_THROWS(r_apply(WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1), -1));
  // E kills 1, so the order-0 truncation is exact on 1 (x) z^n.
  const auto t = WeightTensor::pure(Leg::Antiholomorphic, 0, Leg::Holomorphic, 3);
  CHECK(r_apply(t, 0) == t);
}

TEST_CASE("derived relations reproduce Pol(C)_q") {
  const Presentation p = derive_relations();
  CHECK(same_presentation(p, pol_cq()));
  CHECK(p.format(normal_form(p.parse("z^* z"), p)) == "q^2 z z^* + 1 - q^2");
  CHECK_FALSE(same_presentation(p, extended_pol_cq()));
}
