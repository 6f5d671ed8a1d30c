#pragma once

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>

#include "qdisc/ncpoly.hpp"
#include "qdisc/uqsl2.hpp"

namespace qdisc {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero Laurent polynomial in s, occasionally divided by another one.
  Scalar scalar() {
    Scalar num = laurent();
    while (num.is_zero()) num = laurent();
    if (uniform(0, 3) != 0) return num;
    Scalar den = laurent();
    while (den.is_zero()) den = laurent();
    return num / den;
  }

  Pbw pbw(int max_degree) {
    Pbw m;
    m.f = uniform(0, max_degree);
    m.e = uniform(0, max_degree - m.f);
    m.k = uniform(-2, 2);
    return m;
  }

  UqElement uq(int max_degree, int max_terms = 3) {
    UqElement x;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) x.add_term(pbw(max_degree), small_scalar());
    return x;
  }

  Word word(const Presentation& p, int max_len) {
    Word w(static_cast<std::size_t>(uniform(0, max_len)));
    for (auto& g : w) g = static_cast<Letter>(uniform(0, static_cast<int>(p.size()) - 1));
    return w;
  }

  NCExpr expr(const Presentation& p, int max_len, int max_terms = 3) {
    NCExpr e;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) e.add_term(word(p, max_len), small_scalar());
    return e;
  }

  /// Integer multiple of a power of s; cheap to multiply.
  Scalar small_scalar() {
    int c = 0;
    while (c == 0) c = uniform(-3, 3);
    return Scalar(c) * Scalar::s_power(uniform(-3, 3));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;

  Scalar laurent() {
    Scalar out;
    const int lo = uniform(-3, 2);
    const int len = uniform(0, 3);
    for (int k = lo; k <= lo + len; ++k) out += Scalar(uniform(-2, 2)) * Scalar::s_power(k);
    return out;
  }
};

}  // namespace qdisc
