#pragma once

// Free associative *-algebras over Q(s) and presented quotients given by
// oriented rewrite rules.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdisc/scalar.hpp"

namespace qdisc {

/// Index of a generator inside its presentation; also its precedence.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Storage order for words: shorter first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite linear combination of words with nonzero coefficients.
class NCExpr {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NCExpr() = default;
  static NCExpr constant(const Scalar& c);
  static NCExpr monomial(Word w, const Scalar& c = Scalar(1));
  static NCExpr letter(Letter g, const Scalar& c = Scalar(1)) { return monomial(Word{g}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Longest word length; -1 for zero.
  int degree() const;
  Scalar coeff(const Word& w) const;
  Scalar constant_term() const { return coeff({}); }

  void add_term(const Word& w, const Scalar& c);

  NCExpr& operator+=(const NCExpr& b);
  NCExpr& operator-=(const NCExpr& b);
  NCExpr& operator*=(const Scalar& c);
  NCExpr operator-() const;

  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
  friend NCExpr operator*(NCExpr a, const Scalar& c) { return a *= c; }
  friend NCExpr operator*(const Scalar& c, NCExpr a) { return a *= c; }
  /// Free (unreduced) product: concatenation of words.
  friend NCExpr operator*(const NCExpr& a, const NCExpr& b);
  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCExpr& a, const NCExpr& b) { return !(a == b); }

 private:
  Terms terms_;
};

Word concat(const Word& a, const Word& b);
Word power_word(Letter g, int n);

struct Generator {
  std::string name;
  std::string star_partner;
  /// K-weight data (the exponent of q in K acting on the generator).
  std::vector<int> weight;
  /// Weight used by the monomial order; 1 gives plain degree-lex.
  int order_weight = 1;
};

struct Rule {
  Word lhs;
  NCExpr rhs;
};

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RewriteBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generators (declaration order is the precedence z < z* < ...) plus rewrite
/// rules. The monomial order is weighted degree, then lexicographic.
class Presentation {
 public:
  Presentation(std::string name, std::vector<Generator> generators);

  /// Adds lhs -> rhs; every word of rhs must be strictly smaller than lhs.
  Presentation& add_rule(Word lhs, NCExpr rhs);
  Presentation& add_rule(std::string_view lhs, std::string_view rhs);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return gens_.size(); }

  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;
  Letter star_of(Letter g) const { return star_[g]; }
  int order_weight(const Word& w) const;

  /// Monomial order used for orienting rules.
  bool less(const Word& a, const Word& b) const;

  /// Parses a word such as "z z^* z" or "t11 t12".
  Word parse_word(std::string_view text) const;
  /// Parses an expression over this presentation's generators; products are left unreduced.
  NCExpr parse(std::string_view text) const;

  std::string format_word(const Word& w) const;
  /// Deterministic printing; terms listed in decreasing monomial order.
  std::string format(const NCExpr& e) const;

 private:
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<Letter> star_;
  std::vector<Rule> rules_;
};

/// Rewrites e until no rule applies (leftmost occurrence first, largest word first).
NCExpr normal_form(const NCExpr& e, const Presentation& p, std::size_t step_budget = 1'000'000);
/// Normal form of the product a*b.
NCExpr multiply(const NCExpr& a, const NCExpr& b, const Presentation& p);
NCExpr power(const NCExpr& a, int n, const Presentation& p);
bool is_normal_word(const Word& w, const Presentation& p);

using Conjugation = std::function<Scalar(const Scalar&)>;
/// Coefficient conjugation over Q(s) with q real is the identity.
inline Scalar real_conjugation(const Scalar& c) { return c; }

/// Antilinear anti-automorphism: reverses words, swaps star partners,
/// conjugates coefficients through `conj`.
NCExpr star(const NCExpr& e, const Presentation& p, const Conjugation& conj = real_conjugation);

struct Ambiguity {
  Word word;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  NCExpr reduction_a;
  NCExpr reduction_b;
  bool resolved = false;
};

struct ConfluenceReport {
  std::vector<Ambiguity> ambiguities;
  bool confluent() const;
  std::size_t unresolved() const;
};

/// Diamond-lemma diagnostics: every overlap and inclusion ambiguity among
/// rule leading words of length at most degree_bound.
ConfluenceReport check_local_confluence(const Presentation& p, int degree_bound);

/// Splits e by total degree under the given per-letter degree assignment.
std::map<int, NCExpr> grade(const NCExpr& e, const std::vector<int>& letter_degree);

/// Pol(C)_q: generators z, z^* and z^* z -> q^2 z z^* + (1 - q^2).
const Presentation& pol_cq();

}  // namespace qdisc
