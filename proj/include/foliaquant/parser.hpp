#pragma once

#include <set>
#include <string>
#include <string_view>

#include "foliaquant/complex_expr.hpp"

namespace fq {

/// Infix expression reader over a fixed symbol table.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['+' | '-'] integer)?
///   primary := number | identifier | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp
///
/// Numbers may carry a decimal point and are read exactly. The identifier
/// "i" is the imaginary unit and "pi" is always available.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::set<std::string> symbols);

  Complex parse_complex(std::string_view text) const;
  /// Throws ParseError when the result has a nonzero imaginary part.
  Expr parse_real(std::string_view text) const;

  const std::set<std::string>& symbols() const noexcept { return symbols_; }

 private:
  std::set<std::string> symbols_;
};

bool is_identifier(std::string_view name);

}  // namespace fq
