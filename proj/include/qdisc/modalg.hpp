#pragma once

// U_q(sl2)-module algebras. An element is split into monomials, each monomial
// into blocks; generators act on blocks by tables and on products through
//   K(b1..bm)   = K(b1)..K(bm)
//   E(b1..bm)   = sum_i K(b1..b(i-1)) E(bi) b(i+1)..bm
//   F(b1..bm)   = sum_i b1..b(i-1) F(bi) K^-1(b(i+1)..bm)

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qdisc/ncpoly.hpp"
#include "qdisc/uqsl2.hpp"

namespace qdisc {

enum class Gen { E, F, K, Kinv };
inline constexpr std::array<Gen, 4> kGenerators{Gen::E, Gen::F, Gen::K, Gen::Kinv};
const char* gen_name(Gen g);
UqElement as_uq(Gen g);

/// Carrier given by a presentation plus per-letter tables. K acts on a letter
/// by q^weight; E and F images are arbitrary (unreduced) expressions.
class PresentedCarrier {
 public:
  using Element = NCExpr;
  using Block = Letter;

  PresentedCarrier(std::string name, const Presentation& p, std::vector<int> k_weight, std::vector<NCExpr> e_image,
                   std::vector<NCExpr> f_image, bool has_star);

  const std::string& name() const { return name_; }
  const Presentation& presentation() const { return *p_; }
  bool has_star() const { return has_star_; }

  Element one() const { return NCExpr::constant(1); }
  template <class Fn>
  void for_each_monomial(const Element& f, Fn&& fn) const {
    for (const auto& [w, c] : f.terms()) fn(w, c);
  }
  Element product(const Word& w, std::size_t begin, std::size_t end) const {
    return NCExpr::monomial(Word(w.begin() + static_cast<std::ptrdiff_t>(begin),
                                 w.begin() + static_cast<std::ptrdiff_t>(end)));
  }
  Element block_action(Gen g, Letter b) const { return g == Gen::E ? e_[b] : f_[b]; }
  int block_weight(Letter b) const { return w_[b]; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element normalize(const Element& a) const { return normal_form(a, *p_); }
  Element multiply(const Element& a, const Element& b) const { return qdisc::multiply(a, b, *p_); }
  Element star(const Element& a) const { return normal_form(qdisc::star(a, *p_), *p_); }
  std::string format(const Element& a) const { return p_->format(a); }

 private:
  std::string name_;
  const Presentation* p_;
  std::vector<int> w_;
  std::vector<NCExpr> e_;
  std::vector<NCExpr> f_;
  bool has_star_;
};

// ------------------------------------------------------------- generic engine

template <class C>
typename C::Element act_generator(const C& carrier, Gen g, const typename C::Element& f) {
  using El = typename C::Element;
  El out;
  carrier.for_each_monomial(f, [&](const auto& blocks, const Scalar& c) {
    const std::size_t m = blocks.size();
    std::vector<int> pre(m + 1, 0);  // pre[i] = total weight of blocks [0, i)
    for (std::size_t i = 0; i < m; ++i) pre[i + 1] = pre[i] + carrier.block_weight(blocks[i]);
    const int total = pre[m];
    if (g == Gen::K || g == Gen::Kinv) {
      const int sign = g == Gen::K ? 1 : -1;
      El t = carrier.product(blocks, 0, m);
      t *= c * Scalar::q_power(sign * total);
      out += t;
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      El img = carrier.block_action(g, blocks[i]);
      if (img.is_zero()) continue;
      const int qexp = g == Gen::E ? pre[i] : -(total - pre[i + 1]);
      El t = carrier.mul(carrier.mul(carrier.product(blocks, 0, i), img), carrier.product(blocks, i + 1, m));
      t *= c * Scalar::q_power(qexp);
      out += t;
    }
  });
  return carrier.normalize(out);
}

template <class C>
typename C::Element act(const C& carrier, const UqElement& x, const typename C::Element& f) {
  using El = typename C::Element;
  std::map<int, El> e_pow{{0, carrier.normalize(f)}};
  auto e_power = [&](int n) {
    while (e_pow.rbegin()->first < n) {
      const int have = e_pow.rbegin()->first;
      e_pow.emplace(have + 1, act_generator(carrier, Gen::E, e_pow.rbegin()->second));
    }
    return e_pow.at(n);
  };
  El out;
  for (const auto& [m, c] : x.terms()) {
    El t = e_power(m.e);
    for (int i = 0; i < std::abs(m.k); ++i) t = act_generator(carrier, m.k > 0 ? Gen::K : Gen::Kinv, t);
    for (int i = 0; i < m.f; ++i) t = act_generator(carrier, Gen::F, t);
    t *= c;
    out += t;
  }
  return out;
}

struct CheckFailure {
  std::string what;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
  void merge(const AxiomReport& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

/// Checks xi(fg) = sum xi_(1)(f) xi_(2)(g) over the generators and all pairs
/// from `basis`, the unit rule xi 1 = eps(xi) 1, and the representation
/// property xi(eta f) = (xi eta) f.
template <class C>
AxiomReport module_algebra_check(const C& carrier, const std::vector<typename C::Element>& basis) {
  using El = typename C::Element;
  AxiomReport r;
  auto record = [&](bool ok, std::string what, const El& lhs, const El& rhs) {
    ++r.checked;
    if (!ok) r.failures.push_back({std::move(what), carrier.format(lhs), carrier.format(rhs)});
  };
  for (Gen g : kGenerators) {
    const UqElement xi = as_uq(g);
    const Tensor d = comultiply(xi);
    {
      const El lhs = act(carrier, xi, carrier.one());
      El rhs = carrier.one();
      rhs *= counit(xi);
      record(lhs == carrier.normalize(rhs), std::string(gen_name(g)) + " . 1", lhs, rhs);
    }
    std::vector<std::map<Pbw, El>> cache(basis.size());
    auto act_cached = [&](std::size_t i, const Pbw& m) -> const El& {
      auto it = cache[i].find(m);
      if (it != cache[i].end()) return it->second;
      return cache[i].emplace(m, act(carrier, UqElement::monomial(m), basis[i])).first->second;
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const El lhs = act(carrier, xi, carrier.multiply(basis[i], basis[j]));
        El rhs;
        for (const auto& [k, c] : d.terms()) {
          El t = carrier.multiply(act_cached(i, k[0]), act_cached(j, k[1]));
          t *= c;
          rhs += t;
        }
        rhs = carrier.normalize(rhs);
        record(lhs == rhs,
               std::string(gen_name(g)) + " (" + carrier.format(basis[i]) + ")(" + carrier.format(basis[j]) + ")",
               lhs, rhs);
      }
    for (Gen h : kGenerators) {
      const UqElement eta = as_uq(h);
      for (const auto& f : basis) {
        const El lhs = act(carrier, xi * eta, f);
        const El rhs = act(carrier, xi, act(carrier, eta, f));
        record(lhs == rhs, std::string(gen_name(g)) + gen_name(h) + " on " + carrier.format(f), lhs, rhs);
      }
    }
  }
  return r;
}

// ------------------------------------------------------------- built-in carriers

/// Pol(C)_q extended by the idempotent f0 with f0 z = 0 and z^* f0 = 0.
const Presentation& extended_pol_cq();
/// Laurent polynomials: generators z, z^-1 with z z^-1 = z^-1 z = 1.
const Presentation& laurent_cz();
const Presentation& holomorphic_cz();
const Presentation& antiholomorphic_cz();

const PresentedCarrier& holomorphic();
const PresentedCarrier& laurent();
const PresentedCarrier& antiholomorphic();
const PresentedCarrier& pol_carrier();
const PresentedCarrier& extended();
/// Looks up a built-in carrier by name: holomorphic, laurent, antiholomorphic, pol, extended.
const PresentedCarrier& carrier_by_name(std::string_view name);

/// Normal words of length at most max_len, in increasing monomial order.
std::vector<Word> normal_words(const Presentation& p, int max_len);
std::vector<NCExpr> normal_basis(const PresentedCarrier& c, int degree_bound);

AxiomReport module_algebra_check(const PresentedCarrier& c, int degree_bound);
/// Acting on every defining relation lhs - rhs must give zero after reduction.
AxiomReport relation_ideal_check(const PresentedCarrier& c);
/// (xi f)^* = (S(xi))^* f^* over generators and the normal basis.
AxiomReport star_compat_check(const PresentedCarrier& c, int degree_bound);

/// Decomposition into K-eigencomponents; the key is the exponent w in K f = q^w f.
std::map<int, NCExpr> weights(const NCExpr& f, const PresentedCarrier& c);

}  // namespace qdisc
