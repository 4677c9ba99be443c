#pragma once

#include <string_view>
#include <variant>

#include "famalg/matrix.hpp"
#include "famalg/polynomial.hpp"

namespace famalg {

/// Grammar (whitespace ignored):
///
///   input  := matrix | expr
///   matrix := '[' row (',' row)* ']'        rows of equal length
///   row    := '[' expr (',' expr)* ']'
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*      divisors must be nonzero constants
///   power  := atom ('^' digits)?
///   atom   := digits | name | '(' expr ')'
///   name   := [A-Za-z_][A-Za-z0-9_]*         a generator name
///
/// So "3/4*e^2*f - h" and "[[h/2, f], [e, -h/2]]" both parse. Errors carry
/// line 1 and the 1-based column.
SymPoly parse_polynomial(std::string_view text, const NameList& names);

using Expression = std::variant<SymPoly, MatPoly>;

Expression parse_expression(std::string_view text, const NameList& names);

/// Like parse_expression, with a bare polynomial a read as Id (x) a.
/// Throws DimensionError when a matrix is not d x d.
MatPoly parse_matrix(std::string_view text, const NameList& names, int d);

} // namespace famalg
