#include "qdisc/flag.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qdisc/linalg.hpp"
#include "qdisc/qdiff.hpp"

namespace qdisc {

namespace {

constexpr Letter kT11 = 0;
constexpr Letter kT22 = 1;
constexpr Letter kT12 = 2;
constexpr Letter kT21 = 3;

/// lambda with a == lambda b, if it exists.
std::optional<Scalar> ratio(const NCExpr& a, const NCExpr& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  const auto& [w, c] = *b.terms().begin();
  const Scalar lambda = a.coeff(w) / c;
  if (a != b * lambda) return std::nullopt;
  return lambda;
}

std::optional<Scalar> ratio(const LocalizedElement& a, const LocalizedElement& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  if (a.is_zero()) return Scalar(0);
  if (a.j() != b.j()) return std::nullopt;
  return ratio(a.numerator(), b.numerator());
}

/// (a, b) exponents of a numerator word t11^a t12^b.
std::pair<int, int> plane_exponents(const Word& w) {
  int a = 0;
  int b = 0;
  for (Letter g : w) {
    if (g == kT11 && b == 0) {
      ++a;
    } else if (g == kT12) {
      ++b;
    } else {
      throw std::invalid_argument("localized numerators must be normal words in t11, t12");
    }
  }
  return {a, b};
}

Word plane_word(int a, int b) {
  Word w(static_cast<std::size_t>(a), kT11);
  w.insert(w.end(), static_cast<std::size_t>(b), kT12);
  return w;
}

NCExpr spherical_monomial(int a, int b, int c) {
  NCExpr m = NCExpr::constant(1);
  for (int i = 0; i < a; ++i) m = m * spherical_generator(Spherical::X);
  for (int i = 0; i < b; ++i) m = m * spherical_generator(Spherical::Y);
  for (int i = 0; i < c; ++i) m = m * spherical_generator(Spherical::W);
  return normal_form(m, qsl2_presentation());
}

std::string spherical_name(int a, int b, int c) {
  std::ostringstream os;
  const char* names[] = {"x", "y", "w"};
  const int e[] = {a, b, c};
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << ' ';
    os << names[i];
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

}  // namespace

// ------------------------------------------------------------- C[SL2]_q

const Presentation& qsl2_presentation() {
  static const Presentation p = [] {
    Presentation s("c_sl2_q", {{"t11", "t11", {1}, 2}, {"t22", "t22", {-1}, 2}, {"t12", "t12", {-1}, 1},
                               {"t21", "t21", {1}, 1}});
    const Scalar q = Scalar::q();
    const Scalar qi = q.inverse();
    s.add_rule(Word{kT12, kT11}, NCExpr::monomial({kT11, kT12}, qi));
    s.add_rule(Word{kT21, kT11}, NCExpr::monomial({kT11, kT21}, qi));
    s.add_rule(Word{kT12, kT22}, NCExpr::monomial({kT22, kT12}, q));
    s.add_rule(Word{kT21, kT22}, NCExpr::monomial({kT22, kT21}, q));
    s.add_rule(Word{kT21, kT12}, NCExpr::monomial({kT12, kT21}));
    s.add_rule(Word{kT11, kT22}, NCExpr::constant(1) + NCExpr::monomial({kT12, kT21}, q));
    s.add_rule(Word{kT22, kT11}, NCExpr::constant(1) + NCExpr::monomial({kT12, kT21}, qi));
    return s;
  }();
  return p;
}

const PresentedCarrier& qsl2_carrier() {
  static const PresentedCarrier c("c_sl2_q", qsl2_presentation(), {1, -1, -1, 1},
                                  {NCExpr(), NCExpr::letter(kT21), NCExpr::letter(kT11), NCExpr()},
                                  {NCExpr::letter(kT12), NCExpr(), NCExpr(), NCExpr::letter(kT22)}, false);
  return c;
}

NCExpr regular_act(const UqElement& xi, const NCExpr& f) { return act(qsl2_carrier(), xi, f); }

NCExpr spherical_generator(Spherical g) {
  switch (g) {
    case Spherical::X: return NCExpr::monomial({kT11, kT11});
    case Spherical::Y: return NCExpr::monomial({kT11, kT12});
    case Spherical::W: return NCExpr::monomial({kT12, kT12});
  }
  return {};
}

Scalar quasi_commute(Spherical g) {
  const auto& p = qsl2_presentation();
  const NCExpr y = spherical_generator(Spherical::Y);
  const NCExpr h = spherical_generator(g);
  auto lambda = ratio(multiply(y, h, p), multiply(h, y, p));
  if (!lambda || lambda->is_zero()) throw std::runtime_error("generator does not quasi-commute with y");
  return *lambda;
}

bool OreReport::passed() const {
  for (const auto& w : witnesses)
    if (!w.verified) return false;
  return true;
}

OreReport ore_check(int sample_size, std::uint64_t seed) {
  const auto& p = qsl2_presentation();
  const Scalar lx = quasi_commute(Spherical::X);
  const Scalar ly = quasi_commute(Spherical::Y);
  const Scalar lw = quasi_commute(Spherical::W);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp(0, 3);
  OreReport r;
  for (int i = 0; i < sample_size; ++i) {
    // The first sample is the trivial m = 1, s = 1.
    const int a = i == 0 ? 0 : exp(rng);
    const int b = i == 0 ? 0 : exp(rng);
    const int c = i == 0 ? 0 : exp(rng);
    const int k = i == 0 ? 0 : exp(rng);
    const NCExpr m = spherical_monomial(a, b, c);
    const NCExpr s = power(spherical_generator(Spherical::Y), k, p);
    const Scalar mu = (lx.pow(a) * ly.pow(b) * lw.pow(c)).pow(k);
    OreWitness wt;
    wt.m = spherical_name(a, b, c);
    wt.s_power = k;
    wt.left_scalar = mu;
    wt.right_scalar = mu.inverse();
    wt.verified = multiply(m, s, p) == multiply(s, m * wt.right_scalar, p) &&
                  multiply(s, m, p) == multiply(m * wt.left_scalar, s, p);
    r.witnesses.push_back(std::move(wt));
  }
  return r;
}

// ------------------------------------------------------------- localization

LocalizedElement::LocalizedElement(int j, NCExpr numerator) : j_(j), num_(std::move(numerator)) {
  if (j_ < 0) throw std::invalid_argument("negative power of y^-1");
  canonicalize();
}

void LocalizedElement::canonicalize() {
  num_ = normal_form(num_, qsl2_presentation());
  if (num_.is_zero()) {
    j_ = 0;
    return;
  }
  // t11^a t12^b = q^(a-1) y t11^(a-1) t12^(b-1)
  while (j_ > 0) {
    NCExpr reduced;
    for (const auto& [w, c] : num_.terms()) {
      const auto [a, b] = plane_exponents(w);
      if (a == 0 || b == 0) return;
      reduced.add_term(plane_word(a - 1, b - 1), c * Scalar::q_power(a - 1));
    }
    num_ = std::move(reduced);
    --j_;
  }
  for (const auto& [w, c] : num_.terms()) plane_exponents(w);
}

std::optional<int> LocalizedElement::degree() const {
  if (is_zero()) return std::nullopt;
  const int len = static_cast<int>(num_.terms().begin()->first.size());
  for (const auto& [w, c] : num_.terms())
    if (static_cast<int>(w.size()) != len) return std::nullopt;
  if (len % 2 != 0) return std::nullopt;
  return len / 2 - j_;
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Bring both to the larger denominator: y^-j N = y^-(j+d) y^d N.
  const int j = std::max(j_, o.j_);
  const auto& p = qsl2_presentation();
  const NCExpr y = spherical_generator(Spherical::Y);
  NCExpr sum = multiply(power(y, j - j_, p), num_, p);
  sum += multiply(power(y, j - o.j_, p), o.num_, p);
  *this = LocalizedElement(j, std::move(sum));
  return *this;
}

LocalizedElement& LocalizedElement::operator*=(const Scalar& c) {
  num_ *= c;
  if (num_.is_zero()) j_ = 0;
  return *this;
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // t11^a t12^b y^-k = q^(k(b-a)) y^-k t11^a t12^b
  NCExpr moved;
  for (const auto& [w, c] : a.num_.terms()) {
    const auto [ea, eb] = plane_exponents(w);
    moved.add_term(w, c * Scalar::q_power(b.j_ * (eb - ea)));
  }
  return {a.j_ + b.j_, multiply(moved, b.num_, qsl2_presentation())};
}

std::string LocalizedElement::str() const {
  const std::string n = qsl2_presentation().format(num_);
  if (j_ == 0) return n;
  std::string y = j_ == 1 ? "y^-1" : "y^-" + std::to_string(j_);
  if (num_.size() == 1 && num_.terms().begin()->first.empty()) {
    const Scalar& c = num_.terms().begin()->second;
    if (c.is_one()) return y;
    return "(" + c.str() + ")*" + y;
  }
  return y + "*(" + n + ")";
}

LocalizedElement localize(const NCExpr& spherical) { return {0, spherical}; }

LocalizedCarrier::LocalizedCarrier() {
  const NCExpr y = spherical_generator(Spherical::Y);
  const auto wy = weights(y, qsl2_carrier());
  if (wy.size() != 1) throw std::logic_error("y is not a weight vector");
  const int w = wy.begin()->first;
  const LocalizedElement yi = LocalizedElement::y_inverse();
  // 0 = E(y y^-1) = E(y) y^-1 + K(y) E(y^-1)
  e_yinv_ = yi * localize(regular_act(UqElement::E(), y)) * yi;
  e_yinv_ *= -Scalar::q_power(-w);
  // 0 = F(y y^-1) = F(y) K^-1(y^-1) + y F(y^-1)
  f_yinv_ = yi * localize(regular_act(UqElement::F(), y)) * yi;
  f_yinv_ *= -Scalar::q_power(w);
  yinv_weight_ = -w;
}

LocalizedElement LocalizedCarrier::product(const std::vector<Letter>& blocks, std::size_t begin,
                                           std::size_t end) const {
  int j = 0;
  Word w;
  for (std::size_t i = begin; i < end; ++i) {
    if (blocks[i] == kYInv) {
      if (!w.empty()) throw std::logic_error("y^-1 blocks must precede letters");
      ++j;
    } else {
      w.push_back(blocks[i]);
    }
  }
  return {j, NCExpr::monomial(w)};
}

LocalizedElement LocalizedCarrier::block_action(Gen g, Letter b) const {
  if (b == kYInv) return g == Gen::E ? e_yinv_ : f_yinv_;
  return localize(qsl2_carrier().block_action(g, b));
}

int LocalizedCarrier::block_weight(Letter b) const {
  return b == kYInv ? yinv_weight_ : qsl2_carrier().block_weight(b);
}

const LocalizedCarrier& localized_carrier() {
  static const LocalizedCarrier c;
  return c;
}

LocalizedElement localize_act(const UqElement& xi, const LocalizedElement& f) {
  return act(localized_carrier(), xi, f);
}

LocalizedElement z_power(int n) {
  const LocalizedElement z(1, spherical_generator(Spherical::X));
  const LocalizedElement zp(1, spherical_generator(Spherical::W) * Scalar::q());
  LocalizedElement out = LocalizedElement::constant(1);
  for (int i = 0; i < std::abs(n); ++i) out = out * (n > 0 ? z : zp);
  return out;
}

std::vector<LocalizedElement> localized_basis(int max_j, int max_degree) {
  std::vector<LocalizedElement> out;
  for (int j = 0; j <= max_j; ++j)
    for (int len = 0; len <= 2 * max_degree; len += 2)
      for (int a = 0; a <= len; ++a) {
        LocalizedElement e(j, NCExpr::monomial(plane_word(a, len - a)));
        // Canonical pairs with smaller j already appear earlier.
        if (e.j() == j) out.push_back(std::move(e));
      }
  return out;
}

std::size_t spherical_dimension(int n) {
  std::vector<NCExpr> vecs;
  std::map<Word, Eigen::Index, WordLess> cols;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      NCExpr m = spherical_monomial(a, b, n - a - b);
      for (const auto& [w, c] : m.terms()) cols.emplace(w, static_cast<Eigen::Index>(cols.size()));
      vecs.push_back(std::move(m));
    }
  Mat<Scalar> mat = Mat<Scalar>::Constant(static_cast<Eigen::Index>(vecs.size()),
                                          static_cast<Eigen::Index>(cols.size()), Scalar(0));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (const auto& [w, c] : vecs[i].terms()) mat(static_cast<Eigen::Index>(i), cols.at(w)) = c;
  return rank(mat);
}

OmegaReport omega_subalgebra(int degree_bound) {
  OmegaReport r;
  r.z_times_zprime_is_one = z_power(1) * z_power(-1) == LocalizedElement::constant(1);
  r.all_laurent = true;
  for (int j = 0; j <= degree_bound; ++j)
    for (int a = 0; a <= j; ++a)
      for (int b = 0; a + b <= j; ++b) {
        const int c = j - a - b;
        const LocalizedElement e(j, spherical_monomial(a, b, c));
        OmegaEntry entry{j, a, b, c, a - c, Scalar(0)};
        if (auto lambda = ratio(e, z_power(a - c)); lambda && !lambda->is_zero()) {
          entry.scalar = *lambda;
        } else {
          r.all_laurent = false;
        }
        r.entries.push_back(std::move(entry));
      }
  return r;
}

LaurentMatchReport laurent_action_match(int n_range) {
  LaurentMatchReport r;
  auto expected_raw = [](Gen g, int n) {
    switch (g) {
      case Gen::K: return std::pair{n, qdiff_K(n, 1)};
      case Gen::Kinv: return std::pair{n, qdiff_K(n, -1)};
      case Gen::E: return std::pair{n + 1, qdiff_E(n)};
      case Gen::F: return std::pair{n - 1, qdiff_F(n)};
    }
    return std::pair{n, Scalar(0)};
  };
  auto localized = [](Gen g, int n, int target) {
    return ratio(localize_act(as_uq(g), z_power(n)), z_power(target));
  };
  // z = c Z; pin c from F z = (F z at 1) and verify it everywhere else.
  {
    const auto [t, beta] = expected_raw(Gen::F, 1);
    const auto alpha = localized(Gen::F, 1, t);
    if (!alpha || alpha->is_zero()) {
      r.failure = "F Z is not a nonzero multiple of 1";
      return r;
    }
    r.normalization = beta / *alpha;
  }
  for (int n = -n_range; n <= n_range; ++n)
    for (Gen g : kGenerators) {
      const auto [target, beta] = expected_raw(g, n);
      LaurentMatchRow row{g, n, target, Scalar(0), beta * r.normalization.pow(target - n), false};
      if (auto alpha = localized(g, n, target)) {
        row.localized = *alpha;
        row.ok = row.localized == row.expected;
      }
      if (!row.ok && r.failure.empty())
        r.failure = std::string("mismatch at ") + gen_name(g) + " z^" + std::to_string(n) +
                    ": localized " + row.localized.str() + ", expected " + row.expected.str();
      r.rows.push_back(std::move(row));
    }
  return r;
}

bool no_zero_divisors(int max_degree, int samples, std::uint64_t seed) {
  const auto& p = qsl2_presentation();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&](int n) {
    NCExpr e;
    while (e.is_zero())
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          const int k = coef(rng);
          if (k != 0) e += spherical_monomial(a, b, n - a - b) * Scalar(k);
        }
    return normal_form(e, p);
  };
  for (int i = 0; i < samples; ++i) {
    const NCExpr f = random_element(deg(rng));
    const NCExpr g = random_element(deg(rng));
    if (f.is_zero() || g.is_zero()) continue;
    if (multiply(f, g, p).is_zero()) return false;
  }
  return true;
}

}  // namespace qdisc
