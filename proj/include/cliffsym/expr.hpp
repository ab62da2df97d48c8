#ifndef CLIFFSYM_EXPR_HPP
#define CLIFFSYM_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "cliffsym/multivector.hpp"

namespace cliffsym {

/// Syntax or range error in a multivector expression. position() is the
/// 0-based character offset into the source text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (position " + std::to_string(position) +
                           ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses and evaluates multivector arithmetic over Cl(p,q).
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := scalar | blade | '(' expr ')'
///   blade  := 'e' followed by strictly increasing digits, or bare 'e'
///   scalar := real literal | '(' signed-real ',' signed-real ')'
///
/// Real literals are nonnegative ([0-9]+ with optional fraction and
/// exponent); negative values are written with '-' as the term separator or
/// inside a complex literal, e.g. "(-2,0)*e01". Number lexing is maximal
/// munch, so "2e3" is the real 2000, not 2*e3. Blade labels must be below
/// p+q. Whitespace is ignored.
Multivector parse_expression(const std::string& text, const Signature& sig);

} // namespace cliffsym

#endif
