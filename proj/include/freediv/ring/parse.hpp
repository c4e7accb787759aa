#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freediv/error.hpp"
#include "freediv/ring/polynomial.hpp"
#include "freediv/ring/rational.hpp"

namespace freediv {

// Expression grammar shared by polynomials and operators:
//
//   sum     := unary (('+' | '-') unary)*
//   unary   := ('+' | '-') unary | product
//   product := power ('*' factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' INTEGER)?
//   atom    := INTEGER ('/' INTEGER)? | IDENT | '(' sum ')'
//
// Multiplication must be written explicitly; juxtaposition is an error.

struct Token {
  enum class Kind { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits `text` into tokens; throws ParseError on an unexpected character.
std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser over a Builder that supplies the algebra:
///   Value constant(const Rational&); Value identifier(const Token&);
///   Value add(Value, Value); Value sub(Value, Value); Value mul(Value, Value);
///   Value neg(Value); Value pow(Value, unsigned)
template <class Builder>
class ExpressionParser {
 public:
  using Value = typename Builder::Value;

  ExpressionParser(std::string_view text, Builder& builder) : tokens_(tokenize(text)), b_(builder) {}

  Value parse() {
    if (peek().kind == Token::Kind::end) fail("empty expression");
    Value v = sum();
    if (peek().kind != Token::Kind::end) {
      if (peek().kind == Token::Kind::rparen) fail("unbalanced ')'");
      if (peek().kind == Token::Kind::slash) fail("'/' is only allowed inside rational literals p/q");
      fail("expected operator before '" + peek().text + "'");
    }
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }

  Value sum() {
    Value v = unary();
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      bool plus = next().kind == Token::Kind::plus;
      Value rhs = unary();
      v = plus ? b_.add(std::move(v), std::move(rhs)) : b_.sub(std::move(v), std::move(rhs));
    }
    return v;
  }

  Value unary() {
    if (peek().kind == Token::Kind::minus) {
      next();
      return b_.neg(unary());
    }
    if (peek().kind == Token::Kind::plus) {
      next();
      return unary();
    }
    return product();
  }

  Value product() {
    Value v = power();
    while (peek().kind == Token::Kind::star) {
      next();
      Value rhs = factor();
      v = b_.mul(std::move(v), std::move(rhs));
    }
    return v;
  }

  // Operand after '*': a signed power, so "2*-x" is accepted.
  Value factor() {
    if (peek().kind == Token::Kind::minus) {
      next();
      return b_.neg(factor());
    }
    return power();
  }

  Value power() {
    Value v = atom();
    if (peek().kind == Token::Kind::caret) {
      next();
      if (peek().kind != Token::Kind::integer) fail("exponent must be a non-negative integer");
      const Token& t = next();
      if (t.text.size() > 6) throw ParseError("exponent too large", t.line, t.column);
      v = b_.pow(std::move(v), static_cast<unsigned>(std::stoul(t.text)));
    }
    return v;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::integer: {
        next();
        Integer num(t.text);
        Integer den = 1;
        if (peek().kind == Token::Kind::slash) {
          next();
          if (peek().kind != Token::Kind::integer) fail("expected integer denominator");
          const Token& d = next();
          den = Integer(d.text);
          if (den == 0) throw ParseError("zero denominator", d.line, d.column);
        }
        return b_.constant(make_rational(num, den));
      }
      case Token::Kind::ident:
        next();
        return b_.identifier(t);
      case Token::Kind::lparen: {
        next();
        Value v = sum();
        if (peek().kind != Token::Kind::rparen) fail("expected ')'");
        next();
        return v;
      }
      case Token::Kind::end:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Builder& b_;
};

/// Parses a polynomial over `ambient`; every identifier must be a variable of `ambient`.
Polynomial parse_polynomial(std::string_view text, const VarSet& ambient);

}  // namespace freediv
