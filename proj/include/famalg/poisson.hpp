#pragma once

#include "famalg/lie_algebra.hpp"
#include "famalg/polynomial.hpp"

namespace famalg {

/// Lie-Poisson bracket {a,b} = c^k_ij X_k d^i a d^j b on S(g).
SymPoly poisson_bracket(const LieAlgebra& L, const SymPoly& a, const SymPoly& b);

/// True iff {X_j, a} = 0 for every generator, i.e. a lies in I(g).
bool sym_ad_invariant(const LieAlgebra& L, const SymPoly& a);

/// The closed-form t^2 coefficient of the symmetrized star product:
///   1/8  c^s_ij c^t_kl X_s X_t d^i d^k a d^j d^l b
/// + 1/12 c^t_ks c^s_ji X_t (d^k d^j a d^i b + d^i a d^k d^j b)
/// with every repeated index summed over the full range.
SymPoly m2_closed_form(const LieAlgebra& L, const SymPoly& a, const SymPoly& b);

/// Same bidifferential operator with weights 1/2 and 1/3; the 2-cochain whose
/// Hochschild coboundary cancels {a,{b,c}} - {{a,b},c}.
SymPoly phi_closed_form(const LieAlgebra& L, const SymPoly& a, const SymPoly& b);

/// Basis of the ad-invariant polynomials I(g) of each degree 0..max_degree,
/// homogeneous elements, lowest degree first.
std::vector<SymPoly> invariant_polynomials(const LieAlgebra& L, int max_degree);

} // namespace famalg
