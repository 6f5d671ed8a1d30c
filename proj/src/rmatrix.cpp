#include "qdisc/rmatrix.hpp"

#include <sstream>

#include "qdisc/modalg.hpp"

namespace qdisc {

WeightTensor WeightTensor::pure(Leg left, int a, Leg right, int b, const Scalar& c) {
  WeightTensor t;
  t.left = left;
  t.right = right;
  t.add_term(a, b, c);
  return t;
}

void WeightTensor::add_term(int a, int b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

namespace {

std::string leg_str(Leg l, int n) {
  if (n == 0) return "1";
  std::string s = l == Leg::Holomorphic ? "z" : "z^*";
  if (n > 1) s += "^" + std::to_string(n);
  return s;
}

const PresentedCarrier& leg_carrier(Leg l) { return l == Leg::Holomorphic ? holomorphic() : antiholomorphic(); }

/// Applies a generator to a leg power; returns power -> coefficient.
std::map<int, Scalar> leg_action(Leg l, Gen g, int n) {
  const auto& c = leg_carrier(l);
  std::map<int, Scalar> out;
  const NCExpr img = act_generator(c, g, NCExpr::monomial(power_word(0, n)));
  for (const auto& [w, coef] : img.terms()) out[static_cast<int>(w.size())] = coef;
  return out;
}

}  // namespace

std::string WeightTensor::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [ab, c] = *it;
    std::string cs = c.str();
    const bool mono = c.is_monomial();
    const bool neg = mono && cs.front() == '-';
    if (neg) cs.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (cs != "1") os << (mono ? cs : "(" + cs + ")") << " ";
    os << leg_str(left, ab.first) << " (x) " << leg_str(right, ab.second);
  }
  return os.str();
}

int leg_weight(Leg l, int power) { return l == Leg::Holomorphic ? 2 * power : -2 * power; }

WeightTensor cartan_factor(const WeightTensor& t) {
  WeightTensor out{t.left, t.right, {}};
  for (const auto& [ab, c] : t.terms) {
    const int w = leg_weight(t.left, ab.first) * leg_weight(t.right, ab.second);
    // w is a product of even weights, so -w/2 is an integer power of q.
    out.add_term(ab.first, ab.second, c * Scalar::q_power(-w / 2));
  }
  return out;
}

WeightTensor apply_ef(const WeightTensor& t, int n) {
  WeightTensor cur = t;
  for (int i = 0; i < n; ++i) {
    WeightTensor next{t.left, t.right, {}};
    for (const auto& [ab, c] : cur.terms)
      for (const auto& [a2, ca] : leg_action(t.left, Gen::E, ab.first))
        for (const auto& [b2, cb] : leg_action(t.right, Gen::F, ab.second)) next.add_term(a2, b2, c * ca * cb);
    cur = std::move(next);
  }
  return cur;
}

WeightTensor r_apply(const WeightTensor& t, int order) {
  if (order < 0) throw std::invalid_argument("negative R-matrix order");
  const WeightTensor h = cartan_factor(t);
  const Scalar coeffs[] = {Scalar(1), Scalar::q_power(-1) - Scalar::q()};
  WeightTensor out{t.left, t.right, {}};
  const int known = std::min(order, 1);
  for (int n = 0; n <= known; ++n)
    for (const auto& [ab, c] : apply_ef(h, n).terms) out.add_term(ab.first, ab.second, coeffs[n] * c);
  // Higher coefficients are not fixed here, so their terms must vanish.
  if (!apply_ef(h, known + 1).terms.empty())
    throw TruncationError("E^" + std::to_string(known + 1) + " (x) F^" + std::to_string(known + 1) +
                          " does not vanish on " + t.str());
  return out;
}

WeightTensor braiding(const WeightTensor& t) {
  const WeightTensor r = r_apply(t, 1);
  WeightTensor out{r.right, r.left, {}};
  for (const auto& [ab, c] : r.terms) out.add_term(ab.second, ab.first, c);
  return out;
}

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.size() != b.size() || a.rules().size() != b.rules().size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ga = a.generators()[i];
    const auto& gb = b.generators()[i];
    if (ga.name != gb.name || ga.star_partner != gb.star_partner || ga.weight != gb.weight ||
        ga.order_weight != gb.order_weight)
      return false;
  }
  for (std::size_t i = 0; i < a.rules().size(); ++i)
    if (a.rules()[i].lhs != b.rules()[i].lhs || a.rules()[i].rhs != b.rules()[i].rhs) return false;
  return true;
}

Presentation derive_relations() {
  const auto& ref = pol_cq();
  Presentation p(ref.name(), ref.generators());
  const Letter z = p.letter("z");
  const Letter zs = p.letter("z^*");
  // m = (m- (x) m+)(id (x) R^ (x) id): z^* . z is the image of R^(z^* (x) z) with
  // holomorphic factors to the left.
  const WeightTensor b = braiding(WeightTensor::pure(Leg::Antiholomorphic, 1, Leg::Holomorphic, 1));
  NCExpr rhs;
  for (const auto& [ab, c] : b.terms) rhs += NCExpr::monomial(concat(power_word(z, ab.first), power_word(zs, ab.second)), c);
  p.add_rule(Word{zs, z}, rhs);
  if (!same_presentation(p, ref)) throw std::logic_error("derived relation " + p.format(rhs) + " differs from Pol(C)_q");
  return p;
}

}  // namespace qdisc
