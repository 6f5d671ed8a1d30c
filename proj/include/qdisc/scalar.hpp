#pragma once

// Exact coefficient field Q(s), where s = q^(1/2).

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace qdisc {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial in s with integer coefficients, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(const Integer& c);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(const Integer& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Largest k with s^k dividing the polynomial; 0 for the zero polynomial.
  int valuation() const;
  const Integer& lead() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly shifted(int k) const;  // multiply by s^k, k may be negative if divisible
  IntPoly negated() const;
  IntPoly scaled(const Integer& c) const;
  IntPoly divided(const Integer& c) const;  // exact

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
  /// Primitive gcd with positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);
  /// a / b, throwing if b does not divide a over Z[s].
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

 private:
  std::vector<Integer> c_;
  void trim();
};

/// Element of Q(s), s^2 = q, stored as s^shift * num / den with
/// gcd(num, den) = 1, den(0) != 0, num(0) != 0, coprime contents and
/// positive leading coefficient of den. The representation is canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  Scalar(int n) : Scalar(static_cast<long>(n)) {}  // NOLINT
  explicit Scalar(const Integer& n);
  explicit Scalar(const Rational& r);

  /// s^k = q^(k/2).
  static Scalar s_power(int k);
  static Scalar q_power(int k) { return s_power(2 * k); }
  static Scalar q() { return s_power(2); }
  static Scalar sqrt_q() { return s_power(1); }
  static Scalar from_parts(IntPoly num, int shift, IntPoly den);

  /// Parses the scalar grammar: q, q^(a/2), integers, + - * / ^ ( ).
  static Scalar parse(std::string_view text);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// Single term c * s^k with trivial denominator.
  bool is_monomial() const;
  bool is_constant() const { return shift_ == 0 && num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> as_rational() const;
  /// True when every power of s occurring in num and den is even,
  /// i.e. the scalar is a rational function of q alone.
  bool is_even() const;

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  int shift() const { return shift_; }

  Scalar inverse() const;
  Scalar pow(int n) const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& a);

 private:
  IntPoly num_;
  int shift_ = 0;
  IntPoly den_{Integer(1)};

  void normalize();
};

/// Symmetric q-integer (q^n - q^-n) / (q - q^-1).
Scalar q_int(int n);

enum class EvalMode {
  Exact,        // requires q0 to be a rational square unless the scalar is even in s
  Approximate,  // s0 is a rational approximation of sqrt(q0)
};

/// Value of a at q = q0 as an exact rational.
Rational eval_numeric(const Scalar& a, const Rational& q0, EvalMode mode = EvalMode::Exact,
                      unsigned digits = 40);

/// Floating-point value of a at q = q0 (s0 = sqrt(q0)).
double to_double(const Scalar& a, double q0);

Rational parse_rational(std::string_view text);

}  // namespace qdisc

namespace Eigen {

template <>
struct NumTraits<qdisc::Scalar> : GenericNumTraits<qdisc::Scalar> {
  using Real = qdisc::Scalar;
  using NonInteger = qdisc::Scalar;
  using Nested = qdisc::Scalar;
  using Literal = qdisc::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
