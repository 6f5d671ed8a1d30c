#include "qdisc/modalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdisc/qdiff.hpp"

namespace qdisc {

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::K: return "K";
    case Gen::Kinv: return "K^-1";
  }
  return "?";
}

UqElement as_uq(Gen g) {
  switch (g) {
    case Gen::E: return UqElement::E();
    case Gen::F: return UqElement::F();
    case Gen::K: return UqElement::K(1);
    case Gen::Kinv: return UqElement::K(-1);
  }
  return {};
}

PresentedCarrier::PresentedCarrier(std::string name, const Presentation& p, std::vector<int> k_weight,
                                   std::vector<NCExpr> e_image, std::vector<NCExpr> f_image, bool has_star)
    : name_(std::move(name)),
      p_(&p),
      w_(std::move(k_weight)),
      e_(std::move(e_image)),
      f_(std::move(f_image)),
      has_star_(has_star) {
  if (w_.size() != p.size() || e_.size() != p.size() || f_.size() != p.size())
    throw std::invalid_argument("carrier tables must cover every generator of " + p.name());
}

// ------------------------------------------------------------- presentations

const Presentation& holomorphic_cz() {
  static const Presentation p("c_z", {{"z", "z", {2}, 1}});
  return p;
}

const Presentation& antiholomorphic_cz() {
  static const Presentation p("c_zbar", {{"z^*", "z^*", {-2}, 1}});
  return p;
}

const Presentation& laurent_cz() {
  static const Presentation p = [] {
    Presentation l("c_z_laurent", {{"z", "z", {2}, 1}, {"z^-1", "z^-1", {-2}, 1}});
    l.add_rule(Word{0, 1}, NCExpr::constant(1));
    l.add_rule(Word{1, 0}, NCExpr::constant(1));
    return l;
  }();
  return p;
}

const Presentation& extended_pol_cq() {
  static const Presentation p = [] {
    Presentation x("pol_c_q_f0", {{"z", "z^*", {2}, 1}, {"z^*", "z", {-2}, 1}, {"f0", "f0", {0}, 1}});
    const Scalar q2 = Scalar::q_power(2);
    x.add_rule(Word{1, 0}, NCExpr::monomial({0, 1}, q2) + NCExpr::constant(Scalar(1) - q2));
    x.add_rule(Word{2, 2}, NCExpr::letter(2));
    x.add_rule(Word{2, 0}, NCExpr());
    x.add_rule(Word{1, 2}, NCExpr());
    return x;
  }();
  return p;
}

// ------------------------------------------------------------- carriers

namespace {

NCExpr relabel(const NCExpr& e, const std::vector<Letter>& map) {
  NCExpr out;
  for (const auto& [w, c] : e.terms()) {
    Word v;
    for (Letter g : w) v.push_back(map.at(g));
    out.add_term(v, c);
  }
  return out;
}

/// eta . f^* = (S^-1(eta^*) . f)^* on the generator z^*, expressed in C[z].
NCExpr antiholomorphic_image(Gen g) {
  const UqElement x = antipode_inverse(involution(as_uq(g)));
  // In C[z] and C[z^*] every word is a power of a single letter, so the star
  // is the relabelling z -> z^*.
  return act(holomorphic(), x, NCExpr::letter(0));
}

}  // namespace

const PresentedCarrier& holomorphic() {
  static const PresentedCarrier c("holomorphic", holomorphic_cz(), {2}, {NCExpr::monomial({0, 0}, qdiff_E(1))},
                                  {NCExpr::constant(qdiff_F(1))}, false);
  return c;
}

const PresentedCarrier& laurent() {
  static const PresentedCarrier c("laurent", laurent_cz(), {2, -2},
                                  {NCExpr::monomial({0, 0}, qdiff_E(1)), NCExpr::constant(qdiff_E(-1))},
                                  {NCExpr::constant(qdiff_F(1)), NCExpr::monomial({1, 1}, qdiff_F(-1))}, false);
  return c;
}

const PresentedCarrier& antiholomorphic() {
  static const PresentedCarrier c("antiholomorphic", antiholomorphic_cz(), {-2},
                                  {antiholomorphic_image(Gen::E)}, {antiholomorphic_image(Gen::F)}, false);
  return c;
}

const PresentedCarrier& pol_carrier() {
  static const PresentedCarrier c = [] {
    const auto& h = holomorphic();
    const auto& a = antiholomorphic();
    const std::vector<Letter> hz{0};
    const std::vector<Letter> az{1};
    return PresentedCarrier("pol", pol_cq(), {2, -2},
                            {relabel(h.block_action(Gen::E, 0), hz), relabel(a.block_action(Gen::E, 0), az)},
                            {relabel(h.block_action(Gen::F, 0), hz), relabel(a.block_action(Gen::F, 0), az)}, true);
  }();
  return c;
}

const PresentedCarrier& extended() {
  static const PresentedCarrier c = [] {
    const auto& pc = pol_carrier();
    const Scalar s = Scalar::sqrt_q();
    const Scalar q2 = Scalar::q_power(2);
    // Coefficients kept in the form they are usually written.
    const Scalar ce = -(s / (Scalar(1) - q2));
    const Scalar cf = -(s / (q2.inverse() - Scalar(1)));
    return PresentedCarrier("extended", extended_pol_cq(), {2, -2, 0},
                            {pc.block_action(Gen::E, 0), pc.block_action(Gen::E, 1), NCExpr::monomial({0, 2}, ce)},
                            {pc.block_action(Gen::F, 0), pc.block_action(Gen::F, 1), NCExpr::monomial({2, 1}, cf)},
                            true);
  }();
  return c;
}

const PresentedCarrier& carrier_by_name(std::string_view name) {
  if (name == "holomorphic" || name == "c_z") return holomorphic();
  if (name == "laurent") return laurent();
  if (name == "antiholomorphic" || name == "c_zbar") return antiholomorphic();
  if (name == "pol" || name == "pol_c_q") return pol_carrier();
  if (name == "extended" || name == "pol_c_q_f0") return extended();
  throw std::invalid_argument("unknown carrier '" + std::string(name) + "'");
}

// ------------------------------------------------------------- checks

std::vector<Word> normal_words(const Presentation& p, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < p.size(); ++g) {
        Word v = w;
        v.push_back(static_cast<Letter>(g));
        if (is_normal_word(v, p)) next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&p](const Word& a, const Word& b) { return p.less(a, b); });
  return out;
}

std::vector<NCExpr> normal_basis(const PresentedCarrier& c, int degree_bound) {
  std::vector<NCExpr> out;
  for (auto& w : normal_words(c.presentation(), degree_bound)) out.push_back(NCExpr::monomial(std::move(w)));
  return out;
}

AxiomReport module_algebra_check(const PresentedCarrier& c, int degree_bound) {
  AxiomReport r = module_algebra_check(c, normal_basis(c, degree_bound));
  r.merge(relation_ideal_check(c));
  return r;
}

AxiomReport relation_ideal_check(const PresentedCarrier& c) {
  AxiomReport r;
  const auto& p = c.presentation();
  for (const auto& rule : p.rules()) {
    const NCExpr rel = NCExpr::monomial(rule.lhs) - rule.rhs;
    for (Gen g : kGenerators) {
      ++r.checked;
      const NCExpr img = act_generator(c, g, rel);
      if (!img.is_zero())
        r.failures.push_back({std::string(gen_name(g)) + " on relation " + p.format_word(rule.lhs), p.format(img), "0"});
    }
  }
  return r;
}

AxiomReport star_compat_check(const PresentedCarrier& c, int degree_bound) {
  if (!c.has_star()) throw std::invalid_argument("carrier " + c.name() + " has no star");
  AxiomReport r;
  for (Gen g : kGenerators) {
    const UqElement rhs_op = involution(antipode(as_uq(g)));
    for (const auto& f : normal_basis(c, degree_bound)) {
      ++r.checked;
      const NCExpr lhs = c.star(act(c, as_uq(g), f));
      const NCExpr rhs = act(c, rhs_op, c.star(f));
      if (lhs != rhs)
        r.failures.push_back({"(" + std::string(gen_name(g)) + " " + c.format(f) + ")^*", c.format(lhs), c.format(rhs)});
    }
  }
  return r;
}

std::map<int, NCExpr> weights(const NCExpr& f, const PresentedCarrier& c) {
  std::map<int, NCExpr> out;
  const NCExpr nf = normal_form(f, c.presentation());
  for (const auto& [w, coef] : nf.terms()) {
    int total = 0;
    for (Letter g : w) total += c.block_weight(g);
    out[total].add_term(w, coef);
  }
  return out;
}

}  // namespace qdisc
