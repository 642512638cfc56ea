#pragma once

// Nested-radical expressions over the integers, e.g.
// "sqrt(1/2 + sqrt(2 - cbrt(2))/2^(5/6))".  Parsed once into a tree and
// evaluated in binary64 or at extended precision.
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= integer | '(' '-'? integer ('/' integer)? ')'
//   primary := integer | '(' expr ')' | ('sqrt' | 'cbrt') '(' expr ')'
//
// Roots are the principal real ones.  An even root of a negative radicand
// raises BranchError; odd roots of negative numbers are negative.

#include <memory>
#include <string>
#include <string_view>

#include "quintell/bigreal.hpp"

namespace quintell {

class RadicalExpression {
 public:
  /// Throws DomainError with the offending position on a syntax error.
  static RadicalExpression parse(std::string_view text);

  double value() const;
  BigReal value(long precision_bits) const;

  const std::string& source() const { return source_; }

  struct Node;

 private:
  RadicalExpression(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace quintell
