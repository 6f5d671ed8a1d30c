#include "qdisc/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace qdisc {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  IntPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Integer(0));
  p.c_.back() = c;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (lead() < 0) g = -g;
  return divided(g);
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), Integer(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    auto drop = static_cast<std::size_t>(-k);
    if (drop > c_.size()) throw std::logic_error("IntPoly::shifted: not divisible");
    for (std::size_t i = 0; i < drop; ++i)
      if (c_[i] != 0) throw std::logic_error("IntPoly::shifted: not divisible");
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end());
  }
  return r;
}

IntPoly IntPoly::negated() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::scaled(const Integer& k) const {
  if (k == 0) return {};
  IntPoly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

IntPoly IntPoly::divided(const Integer& k) const {
  if (k == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + b.negated(); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  IntPoly r = a;
  const int db = b.degree();
  const Integer& lb = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const Integer lr = r.lead();
    // r <- lb * r - lr * s^shift * b
    for (auto& c : r.c_) c *= lb;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r.c_[static_cast<std::size_t>(j + shift)].get_mpz_t(), lr.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    r.trim();
  }
  return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly(Integer(1));
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("IntPoly::divide_exact: not divisible");
  IntPoly r = a;
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer& top = r.c_[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::logic_error("IntPoly::divide_exact: not divisible");
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r.c_[static_cast<std::size_t>(j + k)].get_mpz_t(), t.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(k)] = t;
  }
  r.trim();
  if (!r.is_zero()) throw std::logic_error("IntPoly::divide_exact: not divisible");
  return IntPoly(std::move(q));
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  acc.canonicalize();
  return acc;
}

double IntPoly::evaluate(double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return static_cast<double>(acc);
}

// ----------------------------------------------------------------- Scalar

Scalar::Scalar(long n) : num_(Integer(n)) { normalize(); }

Scalar::Scalar(const Integer& n) : num_(n) { normalize(); }

Scalar::Scalar(const Rational& r) : num_(r.get_num()), den_(r.get_den()) { normalize(); }

Scalar Scalar::s_power(int k) {
  Scalar r(1);
  r.shift_ = k;
  return r;
}

Scalar Scalar::from_parts(IntPoly num, int shift, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  Scalar r;
  r.num_ = std::move(num);
  r.shift_ = shift;
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = IntPoly(Integer(1));
    return;
  }
  if (int v = num_.valuation(); v > 0) {
    num_ = num_.shifted(-v);
    shift_ += v;
  }
  if (int v = den_.valuation(); v > 0) {
    den_ = den_.shifted(-v);
    shift_ -= v;
  }
  if (!den_.is_constant()) {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = IntPoly::divide_exact(num_, g);
      den_ = IntPoly::divide_exact(den_, g);
    }
  }
  Integer c = num_.content();
  Integer d = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided(c);
    den_ = den_.divided(c);
  }
}

bool Scalar::is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

bool Scalar::is_monomial() const { return den_.is_one() && num_.degree() == 0; }

std::optional<Rational> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  Rational r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

bool Scalar::is_even() const {
  if (shift_ % 2 != 0) return false;
  for (const auto* p : {&num_, &den_})
    for (std::size_t i = 1; i < p->coeffs().size(); i += 2)
      if (p->coeffs()[i] != 0) return false;
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  r.shift_ = -shift_;
  Integer sign = r.den_.lead() < 0 ? -1 : 1;
  if (sign < 0) {
    r.num_ = r.num_.negated();
    r.den_ = r.den_.negated();
  }
  return r;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  const int lo = std::min(shift_, b.shift_);
  IntPoly a_num = num_.shifted(shift_ - lo);
  IntPoly b_num = b.num_.shifted(b.shift_ - lo);
  if (den_ == b.den_) {
    num_ = a_num + b_num;
  } else {
    num_ = a_num * b.den_ + b_num * den_;
    den_ = den_ * b.den_;
  }
  shift_ = lo;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = Scalar();
  shift_ += b.shift_;
  if (den_.is_one() && b.den_.is_one()) {
    num_ = num_ * b.num_;
    return *this;  // product of primitive-free integer polys is already canonical
  }
  num_ = num_ * b.num_;
  den_ = den_ * b.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) { return *this *= b.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = r.num_.negated();
  return r;
}

namespace {

std::string q_monomial(int s_exp) {
  if (s_exp == 0) return "";
  if (s_exp == 2) return "q";
  if (s_exp % 2 == 0) return "q^" + std::to_string(s_exp / 2);
  return "q^(" + std::to_string(s_exp) + "/2)";
}

// Terms in ascending powers of s; returns the number of terms written.
std::size_t write_laurent(std::ostream& os, const IntPoly& p, int shift) {
  std::size_t written = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int e = static_cast<int>(i) + shift;
    Integer mag = abs(c[i]);
    const bool neg = c[i] < 0;
    if (written == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string mono = q_monomial(e);
    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
    ++written;
  }
  return written;
}

std::size_t term_count(const IntPoly& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }));
}

}  // namespace

std::string Scalar::str() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  const bool den_trivial = den_.is_one();
  const std::size_t nterms = term_count(num_);
  if (den_trivial) {
    write_laurent(os, num_, shift_);
    return os.str();
  }
  if (nterms > 1) os << "(";
  write_laurent(os, num_, shift_);
  if (nterms > 1) os << ")";
  os << "/";
  const bool den_paren = term_count(den_) > 1;
  if (den_paren) os << "(";
  write_laurent(os, den_, 0);
  if (den_paren) os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.str(); }

Scalar q_int(int n) {
  const Scalar q = Scalar::q();
  return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

// ------------------------------------------------------------- evaluation

namespace {

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  Integer n = x.get_num();
  Integer d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational approx_sqrt(const Rational& x, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // floor(sqrt(x) * 10^digits) = isqrt(num * 10^(2 digits) / den)
  Integer big = x.get_num() * scale * scale / x.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
  Rational r(root, scale);
  r.canonicalize();
  return r;
}

Rational eval_at_s(const Scalar& a, const Rational& s0) {
  Rational den = a.denominator().evaluate(s0);
  if (den == 0) throw PoleError("scalar " + a.str() + " has a pole at the evaluation point");
  Rational num = a.numerator().evaluate(s0);
  Rational sp = 1;
  Rational base = a.shift() >= 0 ? s0 : Rational(1) / s0;
  for (int i = 0; i < std::abs(a.shift()); ++i) sp *= base;
  Rational r = num * sp / den;
  r.canonicalize();
  return r;
}

Rational eval_at_q(const Scalar& a, const Rational& q0) {
  // a is even in s: substitute s^2 = q0 directly.
  auto half = [](const IntPoly& p) {
    std::vector<Integer> c;
    for (std::size_t i = 0; i < p.coeffs().size(); i += 2) c.push_back(p.coeffs()[i]);
    return IntPoly(std::move(c));
  };
  Rational den = half(a.denominator()).evaluate(q0);
  if (den == 0) throw PoleError("scalar " + a.str() + " has a pole at the evaluation point");
  Rational num = half(a.numerator()).evaluate(q0);
  Rational qp = 1;
  Rational base = a.shift() >= 0 ? q0 : Rational(1) / q0;
  for (int i = 0; i < std::abs(a.shift()) / 2; ++i) qp *= base;
  Rational r = num * qp / den;
  r.canonicalize();
  return r;
}

}  // namespace

Rational eval_numeric(const Scalar& a, const Rational& q0, EvalMode mode, unsigned digits) {
  if (q0 <= 0 || q0 >= 1) throw std::invalid_argument("evaluation point q0 must lie in (0,1)");
  if (a.is_even()) return eval_at_q(a, q0);
  if (auto s0 = exact_sqrt(q0)) return eval_at_s(a, *s0);
  if (mode == EvalMode::Exact)
    throw std::invalid_argument("q0 is not a rational square; use approximate evaluation");
  return eval_at_s(a, approx_sqrt(q0, digits));
}

double to_double(const Scalar& a, double q0) {
  const double s0 = std::sqrt(q0);
  const double den = a.denominator().evaluate(s0);
  if (den == 0.0) throw PoleError("scalar " + a.str() + " has a pole at the evaluation point");
  return a.numerator().evaluate(s0) * std::pow(s0, a.shift()) / den;
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("not a rational number: " + t);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
  r.canonicalize();
  return r;
}

}  // namespace qdisc
