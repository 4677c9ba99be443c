#pragma once

#include <string>
#include <string_view>

#include "famalg/lie_algebra.hpp"

namespace famalg {

/// An algebra with a representation, as described by a spec file:
///
///   {
///     "algebra": "sl2" | "heisenberg3" | "affine2" | "abelian(n)"
///              | {"label": "heis", "basis": ["p", "q", "z"],
///                 "brackets": [[1, 2, 3, "1"]]},
///     "representation": "trivial" | "standard" | "adjoint"
///                     | {"label": "...", "matrices": [[["0", "1"], ["0", "0"]], ...]}
///   }
///
/// Bracket entries are (i, j, k, c^k_ij) with 1-based indices; the partner
/// c^k_ji = -c^k_ij is filled in unless given explicitly. Explicit algebras
/// may give "dimension" instead of, or alongside, "basis". Matrices are
/// listed in basis order. Rationals are strings "p" or "p/q" (plain
/// integers are accepted too). "representation" defaults to "trivial".
struct AlgebraSpec {
	LieAlgebra algebra;
	Representation representation;
};

/// Syntax errors throw ParseError with line and column; structural errors
/// throw ValidationError naming the JSON path. When `validate` is set the
/// Lie and representation axioms are checked too, and every violation is
/// listed in the ValidationError.
AlgebraSpec parse_spec(std::string_view text, bool validate = true);
AlgebraSpec load_spec(const std::string& path, bool validate = true);

AlgebraSpec preset_spec(const std::string& algebra, const std::string& representation);

} // namespace famalg
