#include "cliffsym/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace cliffsym {

namespace {

enum class TokenKind { Number, Blade, Plus, Minus, Star, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  std::size_t pos;
  double value = 0.0;     // Number
  std::uint32_t mask = 0; // Blade
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
    case '+': tokens.push_back({TokenKind::Plus, start}); ++i; continue;
    case '-': tokens.push_back({TokenKind::Minus, start}); ++i; continue;
    case '*': tokens.push_back({TokenKind::Star, start}); ++i; continue;
    case '(': tokens.push_back({TokenKind::LParen, start}); ++i; continue;
    case ')': tokens.push_back({TokenKind::RParen, start}); ++i; continue;
    case ',': tokens.push_back({TokenKind::Comma, start}); ++i; continue;
    default: break;
    }
    if (is_digit(c)) {
      ++i;
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && is_digit(text[j])) {
          ++j;
          while (j < text.size() && is_digit(text[j])) ++j;
          i = j;
        }
      }
      double value = 0.0;
      const auto res =
          std::from_chars(text.data() + start, text.data() + i, value);
      if (res.ec != std::errc{} || res.ptr != text.data() + i)
        throw ParseError("invalid number '" + text.substr(start, i - start) +
                             "'",
                         start);
      tokens.push_back({TokenKind::Number, start, value});
      continue;
    }
    if (c == 'e') {
      ++i;
      std::uint32_t mask = 0;
      int prev = -1;
      while (i < text.size() && is_digit(text[i])) {
        const int label = text[i] - '0';
        if (label <= prev)
          throw ParseError("blade labels must strictly increase", i);
        mask |= 1u << label;
        prev = label;
        ++i;
      }
      tokens.push_back({TokenKind::Blade, start, 0.0, mask});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  tokens.push_back({TokenKind::End, text.size()});
  return tokens;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  Multivector run() {
    Multivector result = expr();
    if (peek().kind != TokenKind::End)
      throw ParseError("unexpected trailing input", peek().pos);
    return result;
  }

private:
  const Token& peek() const { return tokens_[index_]; }

  Token advance() { return tokens_[index_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  Multivector expr() {
    Multivector acc = term();
    while (true) {
      if (accept(TokenKind::Plus))
        acc = acc + term();
      else if (accept(TokenKind::Minus))
        acc = acc - term();
      else
        return acc;
    }
  }

  Multivector term() {
    Multivector acc = factor();
    while (accept(TokenKind::Star)) acc = acc * factor();
    return acc;
  }

  Multivector factor() {
    const Token& t = peek();
    switch (t.kind) {
    case TokenKind::Number:
      advance();
      return Complex{t.value} * Multivector::unit(sig_);
    case TokenKind::Blade: {
      advance();
      if (t.mask >> sig_.n() != 0)
        throw ParseError("generator label out of range for " + sig_.str(),
                         t.pos);
      return Multivector::basis(sig_, Blade{t.mask});
    }
    case TokenKind::LParen: {
      advance();
      // "(re,im)" complex literal, with optionally signed components;
      // anything else inside the parentheses is a grouped expression.
      if (Complex z; complex_literal(z))
        return z * Multivector::unit(sig_);
      Multivector inner = expr();
      if (!accept(TokenKind::RParen))
        throw ParseError("expected ')'", peek().pos);
      return inner;
    }
    default:
      throw ParseError("expected a number, blade, or '('", t.pos);
    }
  }

  // Called with index_ just past '('. Restores index_ when not a literal.
  bool complex_literal(Complex& out) {
    const std::size_t saved = index_;
    double parts[2];
    for (int k = 0; k < 2; ++k) {
      double sign = 1.0;
      if (accept(TokenKind::Minus))
        sign = -1.0;
      else
        accept(TokenKind::Plus);
      if (peek().kind != TokenKind::Number ||
          !accept_after_number(k == 0 ? TokenKind::Comma : TokenKind::RParen)) {
        index_ = saved;
        return false;
      }
      parts[k] = sign * tokens_[index_ - 2].value;
    }
    out = {parts[0], parts[1]};
    return true;
  }

  // Consumes Number followed by the given delimiter, or nothing.
  bool accept_after_number(TokenKind delimiter) {
    if (tokens_[index_ + 1].kind != delimiter) return false;
    index_ += 2;
    return true;
  }

  std::vector<Token> tokens_;
  Signature sig_;
  std::size_t index_ = 0;
};

} // namespace

Multivector parse_expression(const std::string& text, const Signature& sig) {
  return Parser(lex(text), sig).run();
}

} // namespace cliffsym
