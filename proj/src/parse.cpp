#include "qdisc/parse.hpp"

#include <cctype>

#include "qdisc/ncpoly.hpp"

namespace qdisc::parse {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Dot, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '.': k = Tok::Dot; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  std::unique_ptr<Node> run() {
    auto e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "expected operator or end of input");
    return e;
  }

 private:
  std::vector<Token> t_;
  std::size_t i_ = 0;

  const Token& peek() const { return t_[i_]; }
  const Token& next() { return t_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + what);
    return next();
  }

  static std::unique_ptr<Node> binary(Node::Kind k, std::size_t pos, std::unique_ptr<Node> a,
                                      std::unique_ptr<Node> b) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<Node> expr() {
    auto lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      auto rhs = term();
      lhs = binary(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, op.pos, std::move(lhs),
                   std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<Node> term() {
    auto lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Star || t.kind == Tok::Dot) {
        next();
        lhs = binary(Node::Kind::Mul, t.pos, std::move(lhs), unary());
      } else if (t.kind == Tok::Slash) {
        next();
        lhs = binary(Node::Kind::Div, t.pos, std::move(lhs), unary());
      } else if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen) {
        lhs = binary(Node::Kind::Mul, t.pos, std::move(lhs), power());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> unary() {
    if (peek().kind == Tok::Minus) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Neg;
      n->pos = next().pos;
      n->kids.push_back(unary());
      return n;
    }
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = primary();
    while (peek().kind == Tok::Caret) {
      const std::size_t pos = next().pos;
      auto n = std::make_unique<Node>();
      n->pos = pos;
      if (accept(Tok::Star)) {
        n->kind = Node::Kind::Star;
      } else {
        n->kind = Node::Kind::Pow;
        if (accept(Tok::LParen)) {
          n->exp_num = signed_int();
          if (accept(Tok::Slash)) n->exp_den = signed_int();
          expect(Tok::RParen, "')' closing the exponent");
          if (n->exp_den <= 0) throw ParseError(pos, "exponent denominator must be positive");
          if (n->exp_num % n->exp_den == 0) {
            n->exp_num /= n->exp_den;
            n->exp_den = 1;
          } else if (n->exp_den % 2 == 0 && (2 * n->exp_num) % n->exp_den == 0) {
            n->exp_num = 2 * n->exp_num / n->exp_den;
            n->exp_den = 2;
          }
        } else {
          n->exp_num = signed_int();
        }
      }
      n->kids.push_back(std::move(base));
      base = std::move(n);
    }
    return base;
  }

  long signed_int() {
    const bool neg = accept(Tok::Minus);
    const Token& t = expect(Tok::Number, "an integer exponent");
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.pos, "exponent out of range");
    }
    return neg ? -v : v;
  }

  std::unique_ptr<Node> primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Number;
      n->pos = t.pos;
      n->number = Integer(t.text);
      return n;
    }
    if (t.kind == Tok::Ident) {
      next();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Ident;
      n->pos = t.pos;
      n->ident = t.text;
      return n;
    }
    if (accept(Tok::LParen)) {
      auto e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    throw ParseError(t.pos, "expected a number, identifier or '('");
  }
};

struct ScalarAlgebra {
  using Element = Scalar;
  Element from_scalar(const Scalar& s) const { return s; }
  std::optional<Element> generator(std::string_view) const { return std::nullopt; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element star(const Element& a) const { return a; }
  std::optional<Scalar> as_scalar(const Element& a) const { return a; }
  std::optional<Element> inverse(const Element& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
};

/// Free algebra on a presentation's generators; products are not reduced.
struct FreeAlgebra {
  using Element = NCExpr;
  const Presentation& p;
  Element from_scalar(const Scalar& s) const { return NCExpr::constant(s); }
  std::optional<Element> generator(std::string_view name) const {
    if (auto g = p.find(name)) return NCExpr::letter(*g);
    return std::nullopt;
  }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element star(const Element& a) const { return qdisc::star(a, p); }
  std::optional<Scalar> as_scalar(const Element& a) const {
    if (a.is_zero()) return Scalar(0);
    if (a.size() == 1 && a.terms().begin()->first.empty()) return a.terms().begin()->second;
    return std::nullopt;
  }
  /// Inverts scalars and monomials whose letters all have a generator named
  /// "x^-1" paired with "x".
  std::optional<Element> inverse(const Element& a) const {
    if (a.size() != 1) return std::nullopt;
    const auto& [w, c] = *a.terms().begin();
    Word inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const std::string& n = p.generators()[*it].name;
      const bool is_inv = n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0;
      auto g = p.find(is_inv ? n.substr(0, n.size() - 3) : n + "^-1");
      if (!g) return std::nullopt;
      inv.push_back(*g);
    }
    return NCExpr::monomial(inv, c.inverse());
  }
};

}  // namespace

std::unique_ptr<Node> parse(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace qdisc::parse

namespace qdisc {

Scalar Scalar::parse(std::string_view text) {
  return parse::evaluate(*parse::parse(text), parse::ScalarAlgebra{});
}

NCExpr Presentation::parse(std::string_view text) const {
  return parse::evaluate(*parse::parse(text), parse::FreeAlgebra{*this});
}

Word Presentation::parse_word(std::string_view text) const {
  NCExpr e = parse(text);
  if (e.size() != 1 || !e.terms().begin()->second.is_one())
    throw parse::ParseError(0, "expected a single word");
  return e.terms().begin()->first;
}

}  // namespace qdisc
