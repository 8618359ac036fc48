#ifndef NLNF_CLI_EXPRESSION_HPP
#define NLNF_CLI_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>

#include "nlnf/algebra.hpp"
#include "nlnf/polynomial.hpp"

namespace nlnf::cli {

/// Parse tree for the expression grammar
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' ['-'] digits)?
///   atom  := number | number 'i' | symbol | 'z' '^' '{' expr '}' | '(' expr ')'
///
/// where number is "p" or "p/q" read as a single literal and symbol is the
/// generator ("a", or "x" for polynomials). Whitespace is ignored.
struct Expr {
  enum class Kind { number, imaginary, symbol, monomial, negate, add, sub, mul, div, pow };

  Kind kind = Kind::number;
  Rational value;  // number, imaginary
  long exponent = 0;  // pow
  std::shared_ptr<const Expr> lhs;  // unary operand, left operand, monomial index
  std::shared_ptr<const Expr> rhs;
  std::size_t position = 0;  // source offset, not part of equality

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view text, char symbol = 'a');

/// Minimal-parenthesis rendering that reparses to an equal tree.
std::string print(const Expr& e, char symbol = 'a');

FieldElement parse_element(std::string_view text, const FieldPtr& field);
/// e.g. "2*z^{0} + (1+1i)*z^{a/2}". Products of monomials are Cauchy products.
AlgebraElement parse_algebra(std::string_view text, const FieldPtr& field, Mode mode = Mode::exact);
/// Polynomial in x with rational coefficients, e.g. "x^2 - 2".
Polynomial parse_polynomial(std::string_view text);

}  // namespace nlnf::cli

#endif  // NLNF_CLI_EXPRESSION_HPP
