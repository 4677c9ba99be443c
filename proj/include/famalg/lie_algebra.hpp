#pragma once

#include <string>
#include <vector>

#include "famalg/polynomial.hpp"
#include "famalg/qmatrix.hpp"
#include "famalg/rational.hpp"

namespace famalg {

/// One entry c^k_ij of a bracket list, 0-based indices.
struct BracketEntry {
	int i;
	int j;
	int k;
	Rational value;
};

/// Finite-dimensional Lie algebra presented by structure constants in a fixed
/// basis: [X_i, X_j] = sum_k c^k_ij X_k.
///
/// The full (i, j, k) tensor is stored as given; nothing is symmetrized on
/// construction, so validate_lie() can see inconsistent input. Use
/// from_brackets() to build from a list that may name only one of (i,j)/(j,i).
class LieAlgebra {
public:
	LieAlgebra() = default;
	/// `constants[(i*n + j)*n + k]` is c^k_ij.
	LieAlgebra(std::string label, NameList names, std::vector<Rational> constants);

	/// Entries missing their antisymmetric partner get it filled in as -value.
	/// Throws ValidationError when an explicit partner disagrees.
	static LieAlgebra from_brackets(std::string label, NameList names,
	                                const std::vector<BracketEntry>& brackets);

	[[nodiscard]] int dimension() const { return n_; }
	[[nodiscard]] const NameList& names() const { return names_; }
	[[nodiscard]] const std::string& label() const { return label_; }
	/// Index of a generator name, or -1.
	[[nodiscard]] int index_of(const std::string& name) const;

	[[nodiscard]] const Rational& c(int i, int j, int k) const
	{
		return constants_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
	}
	[[nodiscard]] const std::vector<Rational>& constants() const { return constants_; }

	/// sum_k c^k_ij X_k as a linear polynomial in S(g).
	[[nodiscard]] const SymPoly& bracket_form(int i, int j) const
	{
		return bracket_forms_[static_cast<std::size_t>(i * n_ + j)];
	}
	[[nodiscard]] SymPoly generator(int i) const { return SymPoly::generator(n_, i); }
	[[nodiscard]] SymPoly zero() const { return SymPoly(n_); }
	[[nodiscard]] SymPoly one() const { return SymPoly::one(n_); }

	/// Matrix of ad X_i in the basis: (ad X_i)_{kj} = c^k_ij.
	[[nodiscard]] QMatrix ad(int i) const;

	/// c^j_ij summed over j: the trace of ad X_i.
	[[nodiscard]] Rational ad_trace(int i) const;

	friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
	{
		return a.names_ == b.names_ && a.constants_ == b.constants_;
	}

private:
	std::string label_;
	int n_ = 0;
	NameList names_;
	std::vector<Rational> constants_;
	std::vector<SymPoly> bracket_forms_;
};

/// Finite-dimensional representation: tau[i] is the d x d matrix of X_i.
struct Representation {
	std::string label;
	int d = 1;
	std::vector<QMatrix> tau;
};

struct Violation {
	/// "antisymmetry", "jacobi" or "representation".
	std::string kind;
	/// 1-based indices of the violated instance.
	std::vector<int> indices;
	std::string detail;
};

using ValidityReport = std::vector<Violation>;

/// Every antisymmetry violation (i <= j) and every nonzero Jacobiator
/// (i < j < k, all l). Empty iff L is a Lie algebra.
ValidityReport validate_lie(const LieAlgebra& L);

/// Every pair i < j with [tau_i, tau_j] != sum_k c^k_ij tau_k.
/// Throws DimensionError when the matrices do not fit the algebra.
ValidityReport validate_rep(const LieAlgebra& L, const Representation& R);

std::string describe(const Violation& v, const NameList& names);

/// B_ij = trace(ad X_i ad X_j).
QMatrix killing_form(const LieAlgebra& L);

/// sum B^{ij} X_i X_j with B^{ij} the inverse Killing form; throws
/// NotSemisimpleError when the Killing form is degenerate.
SymPoly casimir(const LieAlgebra& L);

/// New basis X~_j = sum_k T(k, j) X_k.
struct BasisChange {
	QMatrix T;
};

/// Structure constants in the new basis. Throws SingularMatrixError.
LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& change);

/// Rewrites a polynomial in the old generators as a polynomial in the new ones.
SymPoly transport(const SymPoly& a, const BasisChange& change);

/// tau~(X~_j) = sum_k T(k, j) tau(X_k).
Representation transport(const Representation& R, const BasisChange& change);

namespace presets {

/// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2();
/// Basis p, q, z with [p,q] = z.
LieAlgebra heisenberg3();
/// Basis a, b with [a,b] = b.
LieAlgebra affine2();
/// Basis x1..xn, all brackets zero.
LieAlgebra abelian(int n);

/// d = 1, every generator acts by 0.
Representation trivial(const LieAlgebra& L);
/// tau(X_i) = ad X_i.
Representation adjoint(const LieAlgebra& L);
/// Defining representation of the sl2, heisenberg3 and affine2 presets.
/// Throws ValidationError for other algebras.
Representation standard(const LieAlgebra& L);

/// Lookup by name: "sl2", "heisenberg3", "affine2", "abelian(n)".
LieAlgebra algebra(const std::string& name);
/// Lookup by name: "trivial", "standard", "adjoint".
Representation representation(const LieAlgebra& L, const std::string& name);

} // namespace presets

} // namespace famalg
