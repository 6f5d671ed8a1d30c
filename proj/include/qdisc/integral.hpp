#pragma once

// Finite functions sum c_ab z^a f0 (z^*)^b and the invariant integral
//   nu(f) = tr(T(f) q^-H),  q^-H E_n = q^-2n E_n,  normalised by nu(f0) = 1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdisc/linalg.hpp"
#include "qdisc/modalg.hpp"

namespace qdisc {

class FiniteFunction {
 public:
  using Index = std::pair<int, int>;
  using Terms = std::map<Index, Scalar>;

  FiniteFunction() = default;
  static FiniteFunction basis(int a, int b, const Scalar& c = Scalar(1));
  /// Accepts any element of the f0-ideal of the extended algebra.
  static FiniteFunction from_expr(const NCExpr& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int a, int b) const;
  void add_term(int a, int b, const Scalar& c);
  int max_index() const;

  NCExpr to_expr() const;
  FiniteFunction star() const;
  std::string str() const;

  FiniteFunction& operator+=(const FiniteFunction& o);
  friend FiniteFunction operator*(const Scalar& c, const FiniteFunction& f);
  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

class NotFiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FiniteFunction multiply_ff(const FiniteFunction& f, const FiniteFunction& g);
FiniteFunction act(const UqElement& x, const FiniteFunction& f);
Scalar integrate(const FiniteFunction& f);

struct InvarianceReport {
  int degree_bound = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// nu(xi f) = eps(xi) nu(f) for xi in {E, F, K, K^-1} and f = z^a f0 z*^b, a, b <= bound.
InvarianceReport invariance_check(int degree_bound);

struct UniquenessReport {
  int degree_bound = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dimension = 0;
  /// Solution normalised at nu(f0) = 1 when dimension is 1.
  std::map<FiniteFunction::Index, Scalar> solution;
  bool matches_integral = false;
};
/// Solves for all functionals on span{z^a f0 z*^b : a, b <= bound} satisfying
/// nu(xi f) = eps(xi) nu(f) whenever xi f stays inside the span.
UniquenessReport uniqueness_solve(int degree_bound);

struct PositivityReport {
  int degree_bound = 0;
  Rational q0;
  std::size_t size = 0;
  bool positive_definite = false;
  Rational min_pivot;
};
/// Gram matrix G[(a,b),(c,d)] = nu((z^c f0 z*^d)^* z^a f0 z*^b) at q = q0,
/// tested by exact LDL^T pivots.
PositivityReport positivity_check(int degree_bound, const Rational& q0);

Mat<Scalar> gram_matrix(int degree_bound);

}  // namespace qdisc
