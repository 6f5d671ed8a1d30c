#include "qdisc/ncpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qdisc {

// ------------------------------------------------------------------ NCExpr

NCExpr NCExpr::constant(const Scalar& c) { return monomial({}, c); }

NCExpr NCExpr::monomial(Word w, const Scalar& c) {
  NCExpr e;
  if (!c.is_zero()) e.terms_.emplace(std::move(w), c);
  return e;
}

int NCExpr::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

Scalar NCExpr::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCExpr::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCExpr& NCExpr::operator+=(const NCExpr& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NCExpr& NCExpr::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCExpr NCExpr::operator-() const {
  NCExpr r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
  NCExpr r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word power_word(Letter g, int n) { return Word(static_cast<std::size_t>(std::max(n, 0)), g); }

// ------------------------------------------------------------ Presentation

Presentation::Presentation(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), gens_(std::move(generators)) {
  if (gens_.size() > 255) throw PresentationError("too many generators");
  star_.resize(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto partner = find(gens_[i].star_partner);
    if (!partner) throw PresentationError("unknown star partner " + gens_[i].star_partner);
    star_[i] = *partner;
    if (gens_[i].order_weight < 1) throw PresentationError("order weights must be positive");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (star_[star_[i]] != i) throw PresentationError("star is not an involution on " + gens_[i].name);
}

std::optional<Letter> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Presentation::letter(std::string_view name) const {
  auto g = find(name);
  if (!g) throw PresentationError("unknown generator '" + std::string(name) + "' in " + name_);
  return *g;
}

int Presentation::order_weight(const Word& w) const {
  int total = 0;
  for (Letter g : w) total += gens_[g].order_weight;
  return total;
}

bool Presentation::less(const Word& a, const Word& b) const {
  const int wa = order_weight(a);
  const int wb = order_weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Presentation& Presentation::add_rule(Word lhs, NCExpr rhs) {
  if (lhs.empty()) throw PresentationError("rule with empty leading word");
  for (const auto& r : rules_)
    if (r.lhs == lhs) throw PresentationError("duplicate leading word " + format_word(lhs));
  for (const auto& [w, c] : rhs.terms()) {
    for (Letter g : w)
      if (g >= gens_.size()) throw PresentationError("rule uses unknown letter");
    if (!less(w, lhs))
      throw PresentationError("rule " + format_word(lhs) + " -> ... does not decrease the order at " +
                              format_word(w));
  }
  rules_.push_back({std::move(lhs), std::move(rhs)});
  return *this;
}

Presentation& Presentation::add_rule(std::string_view lhs, std::string_view rhs) {
  return add_rule(parse_word(lhs), parse(rhs));
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    first = false;
    const std::string& n = gens_[w[i]].name;
    const bool inverse = n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0;
    if (inverse && j - i > 1) os << n.substr(0, n.size() - 1) << (j - i);
    else os << n;
    if (!inverse && j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string Presentation::format(const NCExpr& e) const {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Word, Scalar>> terms(e.terms().begin(), e.terms().end());
  std::sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) { return less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string cs = c.str();
    if (w.empty()) {
      // The constant term keeps its own signs: "... + 1 - q^2".
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
    os << format_word(w);
  }
  return os.str();
}

// ------------------------------------------------------------- rewriting

namespace {

struct MatchResult {
  std::size_t pos = 0;
  std::size_t rule = 0;
  bool found = false;
};

MatchResult find_leftmost(const Word& w, const Presentation& p) {
  const auto& rules = p.rules();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& lhs = rules[r].lhs;
      if (lhs[0] != w[pos] || pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
        return {pos, r, true};
    }
  }
  return {};
}

// Replaces the occurrence of rule `r` at `pos` in `w` (scaled by c) into `out`.
template <class Sink>
void rewrite_at(const Word& w, std::size_t pos, const Rule& rule, const Scalar& c, Sink&& out) {
  for (const auto& [rw, rc] : rule.rhs.terms()) {
    Word nw;
    nw.reserve(w.size() - rule.lhs.size() + rw.size());
    nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    out(std::move(nw), c * rc);
  }
}

}  // namespace

bool is_normal_word(const Word& w, const Presentation& p) { return !find_leftmost(w, p).found; }

NCExpr normal_form(const NCExpr& e, const Presentation& p, std::size_t step_budget) {
  auto cmp = [&p](const Word& a, const Word& b) { return p.less(a, b); };
  std::map<Word, Scalar, decltype(cmp)> pending(cmp);
  auto push = [&pending](Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [w, c] : e.terms()) push(w, c);

  NCExpr result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    Word w = top->first;
    Scalar c = top->second;
    pending.erase(top);
    MatchResult m = find_leftmost(w, p);
    if (!m.found) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > step_budget)
      throw RewriteBudgetExceeded("normal form in " + p.name() + " exceeded " + std::to_string(step_budget) +
                                  " rewrite steps at word " + p.format_word(w));
    rewrite_at(w, m.pos, p.rules()[m.rule], c, push);
  }
  return result;
}

NCExpr multiply(const NCExpr& a, const NCExpr& b, const Presentation& p) { return normal_form(a * b, p); }

NCExpr power(const NCExpr& a, int n, const Presentation& p) {
  if (n < 0) throw std::invalid_argument("negative power of a noncommutative expression");
  NCExpr r = NCExpr::constant(1);
  for (int i = 0; i < n; ++i) r = multiply(r, a, p);
  return r;
}

NCExpr star(const NCExpr& e, const Presentation& p, const Conjugation& conj) {
  NCExpr r;
  for (const auto& [w, c] : e.terms()) {
    Word sw(w.rbegin(), w.rend());
    for (auto& g : sw) g = p.star_of(g);
    r.add_term(sw, conj(c));
  }
  return r;
}

// ----------------------------------------------------------- confluence

bool ConfluenceReport::confluent() const { return unresolved() == 0; }

std::size_t ConfluenceReport::unresolved() const {
  return static_cast<std::size_t>(
      std::count_if(ambiguities.begin(), ambiguities.end(), [](const Ambiguity& a) { return !a.resolved; }));
}

ConfluenceReport check_local_confluence(const Presentation& p, int degree_bound) {
  if (degree_bound < 2) throw std::invalid_argument("confluence degree bound must be at least 2");
  ConfluenceReport report;
  const auto& rules = p.rules();
  auto reduce_once = [&p](const Word& w, std::size_t pos, const Rule& rule) {
    NCExpr once;
    rewrite_at(w, pos, rule, Scalar(1), [&once](Word nw, const Scalar& c) { once.add_term(nw, c); });
    return normal_form(once, p);
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& a = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& b = rules[j].lhs;
      // Overlaps: a proper suffix of a equals a proper prefix of b.
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
        Word w = concat(a, Word(b.begin() + static_cast<std::ptrdiff_t>(k), b.end()));
        if (static_cast<int>(w.size()) > degree_bound) continue;
        Ambiguity amb{w, i, j, reduce_once(w, 0, rules[i]), reduce_once(w, a.size() - k, rules[j]), false};
        amb.resolved = amb.reduction_a == amb.reduction_b;
        report.ambiguities.push_back(std::move(amb));
      }
      // Inclusions: b occurs inside a.
      if (i == j || b.size() > a.size() || static_cast<int>(a.size()) > degree_bound) continue;
      for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
        if (!std::equal(b.begin(), b.end(), a.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
        Ambiguity amb{a, i, j, reduce_once(a, 0, rules[i]), reduce_once(a, pos, rules[j]), false};
        amb.resolved = amb.reduction_a == amb.reduction_b;
        report.ambiguities.push_back(std::move(amb));
      }
    }
  }
  return report;
}

std::map<int, NCExpr> grade(const NCExpr& e, const std::vector<int>& letter_degree) {
  std::map<int, NCExpr> parts;
  for (const auto& [w, c] : e.terms()) {
    int d = 0;
    for (Letter g : w) d += letter_degree.at(g);
    parts[d].add_term(w, c);
  }
  return parts;
}

const Presentation& pol_cq() {
  static const Presentation p = [] {
    Presentation pres("pol_c_q", {{"z", "z^*", {2}, 1}, {"z^*", "z", {-2}, 1}});
    const Letter z = 0;
    const Letter zs = 1;
    const Scalar q2 = Scalar::q_power(2);
    NCExpr rhs = NCExpr::monomial({z, zs}, q2) + NCExpr::constant(Scalar(1) - q2);
    pres.add_rule({zs, z}, rhs);
    return pres;
  }();
  return p;
}

}  // namespace qdisc
