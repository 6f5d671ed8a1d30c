#include "qdisc/uqsl2.hpp"

#include <sstream>

#include "qdisc/parse.hpp"
#include "qdisc/qdiff.hpp"

namespace qdisc {

// ------------------------------------------------------------- UqElement

UqElement UqElement::monomial(Pbw m, const Scalar& c) {
  UqElement x;
  x.add_term(m, c);
  return x;
}

Scalar UqElement::coeff(const Pbw& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void UqElement::add_term(const Pbw& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UqElement& UqElement::operator+=(const UqElement& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

UqElement& UqElement::operator-=(const UqElement& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

UqElement& UqElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

UqElement UqElement::operator-() const { return *this * Scalar(-1); }

UqElement left_mul_E(const UqElement& x) {
  static const Scalar inv = (Scalar::q() - Scalar::q_power(-1)).inverse();
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    // E K^k = q^-2k K^k E
    out.add_term({m.f, m.k, m.e + 1}, c * Scalar::q_power(-2 * m.k));
    // [E, F^f] = F^(f-1) sum_j (q^-2j K - q^2j K^-1) / (q - q^-1)
    for (int j = 0; j < m.f; ++j) {
      const Scalar cj = c * inv;
      out.add_term({m.f - 1, m.k + 1, m.e}, cj * Scalar::q_power(-2 * j));
      out.add_term({m.f - 1, m.k - 1, m.e}, -cj * Scalar::q_power(2 * j));
    }
  }
  return out;
}

UqElement left_mul_F(const UqElement& x) {
  UqElement out;
  for (const auto& [m, c] : x.terms()) out.add_term({m.f + 1, m.k, m.e}, c);
  return out;
}

UqElement left_mul_K(const UqElement& x, int power) {
  UqElement out;
  for (const auto& [m, c] : x.terms()) out.add_term({m.f, m.k + power, m.e}, c * Scalar::q_power(-2 * power * m.f));
  return out;
}

UqElement operator*(const UqElement& a, const UqElement& b) {
  std::map<int, UqElement> e_powers{{0, b}};
  auto e_power = [&](int n) -> const UqElement& {
    auto it = e_powers.find(n);
    if (it != e_powers.end()) return it->second;
    int have = e_powers.rbegin()->first;
    UqElement cur = e_powers.rbegin()->second;
    while (have < n) {
      cur = left_mul_E(cur);
      ++have;
      e_powers.emplace(have, cur);
    }
    return e_powers.at(n);
  };
  UqElement out;
  for (const auto& [m, c] : a.terms()) {
    UqElement y = left_mul_K(e_power(m.e), m.k);
    for (const auto& [n, d] : y.terms()) out.add_term({n.f + m.f, n.k, n.e}, c * d);
  }
  return out;
}

UqElement power(const UqElement& x, int n) {
  UqElement r = UqElement::constant(1);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

std::string format_pbw(const Pbw& m) {
  std::ostringstream os;
  auto part = [&os, first = true](const char* g, int p) mutable {
    if (p == 0) return;
    if (!first) os << ' ';
    first = false;
    os << g;
    if (p != 1) os << '^' << p;
  };
  part("F", m.f);
  part("K", m.k);
  part("E", m.e);
  const std::string s = os.str();
  return s.empty() ? "1" : s;
}

namespace {

template <class Terms, class KeyFmt>
std::string format_terms(const Terms& terms, KeyFmt&& key_fmt, bool key_is_one_fn(const typename Terms::key_type&)) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string cs = c.str();
    if (key_is_one_fn(k)) {
      if (first) os << cs;
      else if (cs.front() == '-') os << " - " << cs.substr(1);
      else os << " + " << cs;
      first = false;
      continue;
    }
    const bool monomial = c.is_monomial();
    const bool neg = monomial && cs.front() == '-';
    if (neg) cs.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (cs != "1") os << (monomial ? cs : "(" + cs + ")") << " ";
    os << key_fmt(k);
  }
  return os.str();
}

bool pbw_is_one(const Pbw& m) { return m == Pbw{}; }

bool key_is_one(const Tensor::Key& k) {
  for (const auto& m : k)
    if (!(m == Pbw{})) return false;
  return true;
}

struct UqAlgebra {
  using Element = UqElement;
  Element from_scalar(const Scalar& s) const { return UqElement::constant(s); }
  std::optional<Element> generator(std::string_view name) const {
    if (name == "E") return UqElement::E();
    if (name == "F") return UqElement::F();
    if (name == "K") return UqElement::K();
    return std::nullopt;
  }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element star(const Element& a) const { return involution(a); }
  std::optional<Scalar> as_scalar(const Element& a) const {
    if (a.is_zero()) return Scalar(0);
    if (a.terms().size() == 1 && pbw_is_one(a.terms().begin()->first)) return a.terms().begin()->second;
    return std::nullopt;
  }
  std::optional<Element> inverse(const Element& a) const {
    if (a.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *a.terms().begin();
    if (m.f != 0 || m.e != 0) return std::nullopt;
    return UqElement::monomial({0, -m.k, 0}, c.inverse());
  }
};

}  // namespace

std::string UqElement::str() const { return format_terms(terms_, format_pbw, pbw_is_one); }

UqElement UqElement::parse(std::string_view text) {
  return parse::evaluate(*parse::parse(text), UqAlgebra{});
}

// ------------------------------------------------------------- tensors

Tensor Tensor::pure(const std::vector<UqElement>& factors) {
  Tensor t(factors.size());
  std::vector<std::pair<Key, Scalar>> acc{{Key{}, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<Key, Scalar>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [m, d] : f.terms()) {
        Key k2 = k;
        k2.push_back(m);
        next.emplace_back(std::move(k2), c * d);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) t.add_term(k, c);
  return t;
}

Scalar Tensor::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, -c);
  return *this;
}

Tensor operator*(const Scalar& c, const Tensor& a) {
  Tensor out(a.legs());
  for (const auto& [k, v] : a.terms()) out.add_term(k, c * v);
  return out;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor out(a.legs());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<UqElement> legs;
      legs.reserve(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i)
        legs.push_back(UqElement::monomial(ka[i]) * UqElement::monomial(kb[i]));
      out += (ca * cb) * Tensor::pure(legs);
    }
  return out;
}

std::string Tensor::str() const {
  return format_terms(
      terms_,
      [](const Key& k) {
        std::string s;
        for (std::size_t i = 0; i < k.size(); ++i) {
          if (i) s += " (x) ";
          const std::string f = format_pbw(k[i]);
          s += f.find(' ') == std::string::npos ? f : "(" + f + ")";
        }
        return s;
      },
      key_is_one);
}

namespace {

const Tensor& delta_power(bool is_e, int n) {
  static thread_local std::map<std::pair<bool, int>, Tensor> cache;
  auto it = cache.find({is_e, n});
  if (it != cache.end()) return it->second;
  Tensor t = Tensor::pure({UqElement::constant(1), UqElement::constant(1)});
  if (n > 0) {
    const Tensor gen = is_e ? Tensor::pure({UqElement::E(), UqElement::constant(1)}) +
                                  Tensor::pure({UqElement::K(), UqElement::E()})
                            : Tensor::pure({UqElement::F(), UqElement::K(-1)}) +
                                  Tensor::pure({UqElement::constant(1), UqElement::F()});
    t = delta_power(is_e, n - 1) * gen;
  }
  return cache.emplace(std::make_pair(is_e, n), std::move(t)).first->second;
}

}  // namespace

Tensor comultiply(const UqElement& x) {
  Tensor out(2);
  for (const auto& [m, c] : x.terms()) {
    const Tensor k = Tensor::pure({UqElement::K(m.k), UqElement::K(m.k)});
    out += c * (delta_power(false, m.f) * k * delta_power(true, m.e));
  }
  return out;
}

Tensor comultiply_leg(const Tensor& t, std::size_t leg) {
  Tensor out(t.legs() + 1);
  for (const auto& [key, c] : t.terms()) {
    const Tensor d = comultiply(UqElement::monomial(key[leg]));
    for (const auto& [dk, dc] : d.terms()) {
      Tensor::Key k2;
      k2.insert(k2.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
      k2.insert(k2.end(), dk.begin(), dk.end());
      k2.insert(k2.end(), key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
      out.add_term(k2, c * dc);
    }
  }
  return out;
}

UqElement multiply_legs(const Tensor& t) {
  UqElement out;
  for (const auto& [key, c] : t.terms()) {
    UqElement p = UqElement::constant(c);
    for (const auto& m : key) p = p * UqElement::monomial(m);
    out += p;
  }
  return out;
}

// ------------------------------------------------------------- Hopf maps

Scalar counit(const UqElement& x) {
  Scalar s(0);
  for (const auto& [m, c] : x.terms())
    if (m.f == 0 && m.e == 0) s += c;
  return s;
}

namespace {

/// Antimultiplicative extension: (F^a K^b E^c) -> e(E)^c k(b) f(F)^a.
template <class Img>
UqElement anti_extend(const UqElement& x, const UqElement& img_e, const UqElement& img_f, Img&& img_k) {
  UqElement out;
  for (const auto& [m, c] : x.terms()) out += c * (power(img_e, m.e) * img_k(m.k) * power(img_f, m.f));
  return out;
}

}  // namespace

UqElement antipode(const UqElement& x) {
  static const UqElement se = -(UqElement::K(-1) * UqElement::E());
  static const UqElement sf = -(UqElement::F() * UqElement::K());
  return anti_extend(x, se, sf, [](int k) { return UqElement::K(-k); });
}

UqElement antipode_inverse(const UqElement& x) {
  static const UqElement se = -(UqElement::E() * UqElement::K(-1));
  static const UqElement sf = -(UqElement::K() * UqElement::F());
  return anti_extend(x, se, sf, [](int k) { return UqElement::K(-k); });
}

UqElement involution(const UqElement& x, RealForm form) {
  const Scalar sign = form == RealForm::NonCompact ? Scalar(-1) : Scalar(1);
  const UqElement es = sign * (UqElement::K() * UqElement::F());
  const UqElement fs = sign * (UqElement::E() * UqElement::K(-1));
  return anti_extend(x, es, fs, [](int k) { return UqElement::K(k); });
}

// ------------------------------------------------------------- Verma module

VermaModule::VermaModule(int N) : n_(N) {
  if (N < 0) throw std::invalid_argument("Verma truncation must be non-negative");
}

std::vector<Scalar> VermaModule::act(const UqElement& x, int n) const {
  std::vector<Scalar> out(static_cast<std::size_t>(n_ + 1), Scalar(0));
  const UqElement y = x * UqElement::monomial({n, 0, 0});
  for (const auto& [m, c] : y.terms()) {
    if (m.e != 0 || m.f > n_) continue;
    out[static_cast<std::size_t>(m.f)] += c;
  }
  return out;
}

VermaDualityReport verma_duality_check(int N) {
  if (N < 2) throw std::invalid_argument("verma_duality_check needs N >= 2");
  VermaDualityReport r;
  r.N = N;
  const auto un = static_cast<std::size_t>(N);
  auto fail = [&r](std::string why) {
    r.failure = std::move(why);
    r.passed = false;
    return r;
  };

  // Delta(F^n)(v0 (x) v0): E kills v0 and K acts trivially.
  r.structure.assign(un + 1, std::vector<Scalar>(un + 1, Scalar(0)));
  for (int n = 0; n <= N; ++n) {
    const Tensor d = comultiply(UqElement::monomial({n, 0, 0}));
    for (const auto& [k, c] : d.terms()) {
      if (k[0].e != 0 || k[1].e != 0) continue;
      if (k[0].f + k[1].f != n)
        return fail("weight mismatch in Delta(F^" + std::to_string(n) + ")");
      r.structure[static_cast<std::size_t>(n)][static_cast<std::size_t>(k[0].f)] += c;
    }
  }

  // gamma_0 = gamma_1 = 1 and z^n = z * z^(n-1).
  r.gamma.assign(un + 1, Scalar(1));
  for (std::size_t n = 2; n <= un; ++n) r.gamma[n] = r.structure[n][1] * r.gamma[n - 1];
  for (std::size_t n = 0; n <= un; ++n)
    for (std::size_t a = 0; a <= n; ++a) {
      const Scalar lhs = r.structure[n][a] * r.gamma[a] * r.gamma[n - a];
      if (lhs != r.gamma[n])
        return fail("z^" + std::to_string(a) + " z^" + std::to_string(n - a) + " != z^" + std::to_string(n));
    }

  // Dual action <xi phi, v> = <phi, S(xi) v>.
  const VermaModule V(N);
  auto dual = [&](const UqElement& xi, int n) {
    std::vector<Scalar> img(un + 1, Scalar(0));
    const UqElement s = antipode(xi);
    for (int m = 0; m <= N; ++m) {
      const auto col = V.act(s, m);
      const auto um = static_cast<std::size_t>(m);
      img[um] = col[static_cast<std::size_t>(n)] * r.gamma[static_cast<std::size_t>(n)] / r.gamma[um];
    }
    return img;
  };
  auto only = [&](const std::vector<Scalar>& img, int at) {
    for (int m = 0; m <= N; ++m)
      if (m != at && !img[static_cast<std::size_t>(m)].is_zero()) return false;
    return true;
  };

  const Scalar alpha1 = dual(UqElement::F(), 1)[0];
  if (alpha1.is_zero()) return fail("F z vanishes in the dual");
  r.lambda = qdiff_F(1) / alpha1;
  for (int n = 0; n < N; ++n) {
    const auto un_ = static_cast<std::size_t>(n);
    for (int p : {1, -1}) {
      auto img = dual(UqElement::K(p), n);
      if (!only(img, n) || img[un_] != qdiff_K(n, p))
        return fail("K^" + std::to_string(p) + " on z^" + std::to_string(n));
    }
    auto fi = dual(UqElement::F(), n);
    if (n > 0 && (!only(fi, n - 1) || r.lambda * fi[un_ - 1] != qdiff_F(n)))
      return fail("F on z^" + std::to_string(n));
    if (n == 0 && !only(fi, -1)) return fail("F on 1");
    auto ei = dual(UqElement::E(), n);
    if (!only(ei, n + 1) || ei[un_ + 1] / r.lambda != qdiff_E(n))
      return fail("E on z^" + std::to_string(n));
  }
  r.passed = true;
  return r;
}

}  // namespace qdisc
