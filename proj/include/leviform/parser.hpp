#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "leviform/hermitian_poly.hpp"
#include "leviform/poly.hpp"

namespace leviform {

// Grammar (whitespace, including newlines, is insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'i' | VARIABLE | FUNC '(' expr ')' | '(' expr ')'
//   FUNC    := 'conj' | 'Re' | 'Im'
//
// Variables are z1..zn; x and y alias z1 and z2 when n == 2. Division is
// only by nonzero constants, so "1/2*x" is a rational coefficient. Decimal
// literals are rejected. Re and Im may not nest.

struct ExprNode {
  enum class Kind { Literal, ImaginaryUnit, Variable, Neg, Add, Sub, Mul, Div, Pow, Conj, Re, Im };

  Kind kind;
  int line = 1;
  int column = 1;
  mpq_class literal;             // Literal
  std::size_t variable = 0;      // Variable (0-based)
  std::uint32_t exponent = 0;    // Pow
  std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprAst = std::unique_ptr<ExprNode>;

/// Syntax-level parse. Throws ParseError with a 1-based line/column.
ExprAst parse_expression(std::string_view src, std::size_t nvars);

/// Holomorphic polynomial in nvars variables. Rejects conj, Re and Im.
Poly parse_holomorphic(std::string_view src, std::size_t nvars);

/// Real-valued polynomial in z and conj(z). Throws DomainError(NotRealValued)
/// when the coefficient table violates conj(F_{mu,nu}) == F_{nu,mu}.
HermitianPoly parse_real_analytic(std::string_view src, std::size_t nvars);

}  // namespace leviform
