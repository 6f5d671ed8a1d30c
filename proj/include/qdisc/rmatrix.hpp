#pragma once

// Truncated R-matrix on antiholomorphic (x) holomorphic tensors:
//   R = (sum_n c_n E^n (x) F^n) q^(-H (x) H / 2),  c_0 = 1, c_1 = q^-1 - q.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdisc/ncpoly.hpp"

namespace qdisc {

enum class Leg { Antiholomorphic, Holomorphic };

/// Sum of c * (x^a (x) y^b) where each leg is a power of z^* or z.
struct WeightTensor {
  Leg left = Leg::Antiholomorphic;
  Leg right = Leg::Holomorphic;
  std::map<std::pair<int, int>, Scalar> terms;

  static WeightTensor pure(Leg left, int a, Leg right, int b, const Scalar& c = Scalar(1));
  void add_term(int a, int b, const Scalar& c);
  bool operator==(const WeightTensor& o) const = default;
  std::string str() const;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H-eigenvalue of a leg power: 2n on z^n, -2n on (z^*)^n.
int leg_weight(Leg l, int power);

/// q^(-H (x) H / 2) on each weight component.
WeightTensor cartan_factor(const WeightTensor& t);
/// (E^n (x) F^n) t.
WeightTensor apply_ef(const WeightTensor& t, int n);
/// R t truncated at `order`; throws TruncationError if a dropped or
/// unknown-coefficient term is nonzero on t.
WeightTensor r_apply(const WeightTensor& t, int order = 1);
/// flip o R.
WeightTensor braiding(const WeightTensor& t);

/// Reads off z^* z from the braiding and returns the induced presentation.
/// Throws if it differs from the built-in Pol(C)_q presentation.
Presentation derive_relations();
bool same_presentation(const Presentation& a, const Presentation& b);

}  // namespace qdisc
