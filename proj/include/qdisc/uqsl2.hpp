#pragma once

// U_q(sl2) in the PBW basis F^a K^b E^c with
//   K E = q^2 E K,  K F = q^-2 F K,  E F - F E = (K - K^-1) / (q - q^-1),
//   Delta(E) = E (x) 1 + K (x) E,  Delta(F) = F (x) K^-1 + 1 (x) F,  Delta(K) = K (x) K,
//   S(E) = -K^-1 E,  S(F) = -F K,  S(K) = K^-1.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdisc/scalar.hpp"

namespace qdisc {

struct Pbw {
  int f = 0;
  int k = 0;
  int e = 0;
  auto operator<=>(const Pbw&) const = default;
};

class UqElement {
 public:
  using Terms = std::map<Pbw, Scalar>;

  UqElement() = default;
  static UqElement monomial(Pbw m, const Scalar& c = Scalar(1));
  static UqElement constant(const Scalar& c) { return monomial({0, 0, 0}, c); }
  static UqElement E() { return monomial({0, 0, 1}); }
  static UqElement F() { return monomial({1, 0, 0}); }
  static UqElement K(int power = 1) { return monomial({0, power, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Pbw& m) const;
  void add_term(const Pbw& m, const Scalar& c);

  UqElement& operator+=(const UqElement& b);
  UqElement& operator-=(const UqElement& b);
  UqElement& operator*=(const Scalar& c);
  UqElement operator-() const;

  friend UqElement operator+(UqElement a, const UqElement& b) { return a += b; }
  friend UqElement operator-(UqElement a, const UqElement& b) { return a -= b; }
  friend UqElement operator*(UqElement a, const Scalar& c) { return a *= c; }
  friend UqElement operator*(const Scalar& c, UqElement a) { return a *= c; }
  /// PBW product.
  friend UqElement operator*(const UqElement& a, const UqElement& b);
  friend bool operator==(const UqElement& a, const UqElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UqElement& a, const UqElement& b) { return !(a == b); }

  std::string str() const;
  /// Parses E, F, K, K^-1, q-scalars and the usual operators; x^* is the involution.
  static UqElement parse(std::string_view text);

 private:
  Terms terms_;
};

std::string format_pbw(const Pbw& m);

/// Left multiplication by a single generator, kept separate because the
/// module actions compose these directly.
UqElement left_mul_E(const UqElement& x);
UqElement left_mul_F(const UqElement& x);
UqElement left_mul_K(const UqElement& x, int power);

UqElement power(const UqElement& x, int n);

/// Multi-leg tensor with the legwise product.
class Tensor {
 public:
  using Key = std::vector<Pbw>;
  using Terms = std::map<Key, Scalar>;

  explicit Tensor(std::size_t legs = 2) : legs_(legs) {}
  static Tensor pure(const std::vector<UqElement>& factors);

  std::size_t legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Key& k) const;
  void add_term(const Key& k, const Scalar& c);

  Tensor& operator+=(const Tensor& b);
  Tensor& operator-=(const Tensor& b);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Scalar& c, const Tensor& a);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_ == b.legs_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::size_t legs_;
  Terms terms_;
};

Tensor comultiply(const UqElement& x);
/// Applies Delta to one leg, producing a tensor with one more leg.
Tensor comultiply_leg(const Tensor& t, std::size_t leg);
/// Applies a linear map to one leg.
template <class Fn>
Tensor map_leg(const Tensor& t, std::size_t leg, Fn&& fn) {
  Tensor out(t.legs());
  for (const auto& [key, c] : t.terms()) {
    const UqElement img = fn(UqElement::monomial(key[leg]));
    for (const auto& [m, d] : img.terms()) {
      auto k2 = key;
      k2[leg] = m;
      out.add_term(k2, c * d);
    }
  }
  return out;
}
/// Multiplies the legs together in order.
UqElement multiply_legs(const Tensor& t);

Scalar counit(const UqElement& x);
UqElement antipode(const UqElement& x);
UqElement antipode_inverse(const UqElement& x);

enum class RealForm {
  NonCompact,  // U_q su(1,1): E* = -K F, F* = -E K^-1
  Compact,     // U_q su(2):   E* =  K F, F* =  E K^-1
};
/// Antilinear antiautomorphism with K* = K.
UqElement involution(const UqElement& x, RealForm form = RealForm::NonCompact);

/// Verma module with basis v_n = F^n v0, 0 <= n <= N; E v0 = 0, K v0 = v0.
class VermaModule {
 public:
  explicit VermaModule(int N);
  int truncation() const { return n_; }
  /// Coefficients of x v_n in the basis v_0..v_N; components beyond N are dropped.
  std::vector<Scalar> act(const UqElement& x, int n) const;

 private:
  int n_;
};

struct VermaDualityReport {
  int N = 0;
  bool passed = false;
  /// Structure constants c[n][a] of Delta(F^n)(v0 (x) v0) = sum_a c[n][a] v_a (x) v_{n-a}.
  std::vector<std::vector<Scalar>> structure;
  /// Dual normalisation <z^n, v_n> = gamma_n.
  std::vector<Scalar> gamma;
  /// Rescaling z -> lambda z identifying the dual action with the q-difference operators.
  Scalar lambda;
  std::string failure;
};

/// Dualises Delta(F^n)(v0 (x) v0) for n <= N and checks that the dual basis
/// multiplies like monomials and carries the q-difference action on C[z].
VermaDualityReport verma_duality_check(int N);

}  // namespace qdisc
