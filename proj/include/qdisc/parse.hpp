#pragma once

// Expression grammar shared by scalars, presented algebras and U_q(sl2):
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '.' | '/' | <juxtaposition>) unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)*
//   exponent := '*' | ['-'] int | '(' ['-'] int ['/' int] ')'
//   primary  := int | identifier | '(' expr ')'
//
// The identifier `q` always denotes the deformation parameter.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdisc/scalar.hpp"

namespace qdisc::parse {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Node {
  enum class Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow, Star };
  Kind kind = Kind::Number;
  std::size_t pos = 0;
  Integer number;
  std::string ident;
  long exp_num = 0;  // Pow: exponent exp_num / exp_den
  long exp_den = 1;
  std::vector<std::unique_ptr<Node>> kids;
};

std::unique_ptr<Node> parse(std::string_view text);

/// Evaluates a syntax tree inside an algebra. The algebra supplies
///   Element from_scalar(const Scalar&)
///   std::optional<Element> generator(std::string_view)
///   Element add(a, b), mul(a, b), star(a)
///   std::optional<Scalar> as_scalar(a)
///   std::optional<Element> inverse(a)
template <class Algebra>
typename Algebra::Element evaluate(const Node& n, const Algebra& alg) {
  using E = typename Algebra::Element;
  auto ev = [&alg](const Node& k) { return evaluate(k, alg); };
  switch (n.kind) {
    case Node::Kind::Number:
      return alg.from_scalar(Scalar(n.number));
    case Node::Kind::Ident: {
      if (n.ident == "q") return alg.from_scalar(Scalar::q());
      if (auto g = alg.generator(n.ident)) return *g;
      throw ParseError(n.pos, "unknown generator '" + n.ident + "'");
    }
    case Node::Kind::Add:
      return alg.add(ev(*n.kids[0]), ev(*n.kids[1]));
    case Node::Kind::Sub:
      return alg.add(ev(*n.kids[0]), alg.mul(alg.from_scalar(Scalar(-1)), ev(*n.kids[1])));
    case Node::Kind::Mul:
      return alg.mul(ev(*n.kids[0]), ev(*n.kids[1]));
    case Node::Kind::Neg:
      return alg.mul(alg.from_scalar(Scalar(-1)), ev(*n.kids[0]));
    case Node::Kind::Div: {
      E den = ev(*n.kids[1]);
      auto s = alg.as_scalar(den);
      if (!s) throw ParseError(n.kids[1]->pos, "division only by scalars");
      if (s->is_zero()) throw ParseError(n.kids[1]->pos, "division by zero");
      return alg.mul(ev(*n.kids[0]), alg.from_scalar(s->inverse()));
    }
    case Node::Kind::Star:
      return alg.star(ev(*n.kids[0]));
    case Node::Kind::Pow: {
      const Node& base = *n.kids[0];
      if (n.exp_den != 1) {
        if (n.exp_den != 2 || base.kind != Node::Kind::Ident || base.ident != "q")
          throw ParseError(n.pos, "fractional exponents are only allowed on q (halves)");
        return alg.from_scalar(Scalar::s_power(static_cast<int>(n.exp_num)));
      }
      E b = ev(base);
      long e = n.exp_num;
      if (e < 0) {
        auto inv = alg.inverse(b);
        if (!inv) throw ParseError(n.pos, "negative power of a non-invertible element");
        b = *inv;
        e = -e;
      }
      E r = alg.from_scalar(Scalar(1));
      for (long i = 0; i < e; ++i) r = alg.mul(r, b);
      return r;
    }
  }
  throw ParseError(n.pos, "malformed expression");
}

}  // namespace qdisc::parse
