#pragma once

// C[SL2]_q, its spherical subalgebra generated by x = t11^2, y = t11 t12,
// w = t12^2, the localisation at powers of y, and the degree-zero part
// C[Omega]_q generated by Z = y^-1 x and Z' = q y^-1 w.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdisc/modalg.hpp"

namespace qdisc {

/// Generators t11 < t22 < t12 < t21 with order weights 2, 2, 1, 1.
const Presentation& qsl2_presentation();
/// Regular action xi . t_ik = sum_j t_ij pi(xi)_jk with pi(K) = diag(q, q^-1),
/// pi(E) e2 = e1, pi(F) e1 = e2.
const PresentedCarrier& qsl2_carrier();
NCExpr regular_act(const UqElement& xi, const NCExpr& f);

enum class Spherical { X, Y, W };
/// x, y or w as an element of C[SL2]_q.
NCExpr spherical_generator(Spherical g);
/// lambda with y g = lambda g y.
Scalar quasi_commute(Spherical g);

struct OreWitness {
  std::string m;
  int s_power = 0;
  Scalar right_scalar;  // m y^k = y^k (right_scalar m)
  Scalar left_scalar;   // y^k m = (left_scalar m) y^k
  bool verified = false;
};
struct OreReport {
  std::vector<OreWitness> witnesses;
  bool passed() const;
};
/// Random monomials x^a y^b w^c against y^k with explicit Ore solutions.
OreReport ore_check(int sample_size, std::uint64_t seed = 1);

/// y^-j N with N a polynomial in t11, t12; canonical with minimal j.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  LocalizedElement(int j, NCExpr numerator);
  static LocalizedElement constant(const Scalar& c) { return {0, NCExpr::constant(c)}; }
  static LocalizedElement y_inverse(int j = 1) { return {j, NCExpr::constant(1)}; }

  int j() const { return j_; }
  const NCExpr& numerator() const { return num_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Z-degree when homogeneous: half the numerator degree minus j.
  std::optional<int> degree() const;

  LocalizedElement& operator+=(const LocalizedElement& o);
  LocalizedElement& operator*=(const Scalar& c);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    return a.j_ == b.j_ && a.num_ == b.num_;
  }
  friend bool operator!=(const LocalizedElement& a, const LocalizedElement& b) { return !(a == b); }

  std::string str() const;

 private:
  int j_ = 0;
  NCExpr num_;
  void canonicalize();
};

/// Block engine adaptor; blocks are y^-1 (encoded as 255) or t11, t12.
class LocalizedCarrier {
 public:
  using Element = LocalizedElement;
  using Block = Letter;
  static constexpr Letter kYInv = 255;

  LocalizedCarrier();

  Element one() const { return LocalizedElement::constant(1); }
  template <class Fn>
  void for_each_monomial(const Element& f, Fn&& fn) const {
    for (const auto& [w, c] : f.numerator().terms()) {
      std::vector<Letter> blocks(static_cast<std::size_t>(f.j()), kYInv);
      blocks.insert(blocks.end(), w.begin(), w.end());
      fn(blocks, c);
    }
  }
  Element product(const std::vector<Letter>& blocks, std::size_t begin, std::size_t end) const;
  Element block_action(Gen g, Letter b) const;
  int block_weight(Letter b) const;
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element normalize(const Element& a) const { return a; }
  std::string format(const Element& a) const { return a.str(); }

 private:
  Element e_yinv_;
  Element f_yinv_;
  int yinv_weight_ = 0;
};

const LocalizedCarrier& localized_carrier();
LocalizedElement localize_act(const UqElement& xi, const LocalizedElement& f);
LocalizedElement localize(const NCExpr& spherical);
/// Z^n, with Z^-1 = Z' = q y^-1 w.
LocalizedElement z_power(int n);
/// Monomials y^-j t11^a t12^b with j <= max_j and a + b even, a + b <= 2 * max_degree.
std::vector<LocalizedElement> localized_basis(int max_j, int max_degree);

/// Exact dimension of the degree-n part of the spherical subalgebra.
std::size_t spherical_dimension(int n);

struct OmegaEntry {
  int j = 0;
  int a = 0, b = 0, c = 0;  // y^-j x^a y^b w^c, a + b + c = j
  int power = 0;            // equals scalar * Z^power
  Scalar scalar;
};
struct OmegaReport {
  bool z_times_zprime_is_one = false;
  std::vector<OmegaEntry> entries;
  bool all_laurent = false;
};
/// Degree-zero classes up to j = degree_bound expressed through Z and Z'.
OmegaReport omega_subalgebra(int degree_bound);

struct LaurentMatchRow {
  Gen g;
  int n = 0;
  int target = 0;
  Scalar localized;  // xi Z^n = localized * Z^target
  Scalar expected;   // q-difference coefficient times c^(target - n)
  bool ok = false;
};
struct LaurentMatchReport {
  Scalar normalization;  // z = c Z
  std::vector<LaurentMatchRow> rows;
  std::string failure;
  bool passed() const { return failure.empty(); }
};
LaurentMatchReport laurent_action_match(int n_range);

/// Products of random nonzero homogeneous spherical elements are nonzero.
bool no_zero_divisors(int max_degree, int samples, std::uint64_t seed = 1);

}  // namespace qdisc
