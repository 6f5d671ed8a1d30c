#pragma once

// Closed-form q-difference action of U_q(sl2) on Laurent monomials:
//   K^{+-1} z^n = q^{+-2n} z^n,
//   F z^n = q^(1/2) (q^-2n - 1) / (q^-2 - 1) z^(n-1),
//   E z^n = -q^(1/2) (1 - q^2n) / (1 - q^2) z^(n+1).

#include "qdisc/scalar.hpp"

namespace qdisc {

inline Scalar qdiff_K(int n, int power = 1) { return Scalar::q_power(2 * n * power); }

inline Scalar qdiff_F(int n) {
  const Scalar q2 = Scalar::q_power(2);
  return Scalar::sqrt_q() * (q2.pow(-n) - Scalar(1)) / (q2.inverse() - Scalar(1));
}

inline Scalar qdiff_E(int n) {
  const Scalar q2 = Scalar::q_power(2);
  return -Scalar::sqrt_q() * (Scalar(1) - q2.pow(n)) / (Scalar(1) - q2);
}

}  // namespace qdisc
