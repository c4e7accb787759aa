#include "freediv/ring/parse.hpp"

#include <cctype>

namespace freediv {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto single = [&](Token::Kind k) {
    out.push_back(Token{k, std::string(1, text[i]), line, col});
    ++i;
    ++col;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i, start_col = col;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++col;
      }
      out.push_back(Token{Token::Kind::integer, std::string(text.substr(start, i - start)), line, start_col});
      if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        throw ParseError("expected operator before identifier (write '*' explicitly)", line, col);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i, start_col = col;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
        ++col;
      }
      out.push_back(Token{Token::Kind::ident, std::string(text.substr(start, i - start)), line, start_col});
      continue;
    }
    switch (c) {
      case '+': single(Token::Kind::plus); break;
      case '-': single(Token::Kind::minus); break;
      case '*': single(Token::Kind::star); break;
      case '^': single(Token::Kind::caret); break;
      case '/': single(Token::Kind::slash); break;
      case '(': single(Token::Kind::lparen); break;
      case ')': single(Token::Kind::rparen); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back(Token{Token::Kind::end, "end of input", line, col});
  return out;
}

namespace {

struct PolynomialBuilder {
  using Value = Polynomial;
  const VarSet& ambient;

  Value constant(const Rational& c) { return Polynomial::constant(ambient, c); }
  Value identifier(const Token& t) {
    auto idx = ambient.index_of(t.text);
    if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
    return Polynomial::variable(ambient, *idx);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }
  Value pow(Value a, unsigned e) { return a.pow(e); }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& ambient) {
  PolynomialBuilder b{ambient};
  return ExpressionParser<PolynomialBuilder>(text, b).parse();
}

}  // namespace freediv
