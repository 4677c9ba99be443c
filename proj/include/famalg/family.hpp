#pragma once

#include <memory>
#include <vector>

#include "famalg/enveloping.hpp"
#include "famalg/lie_algebra.hpp"
#include "famalg/matrix.hpp"

namespace famalg {

/// A Lie algebra g with a representation tau, and the operators on
/// End(V_tau) (x) S(g) and End(V_tau) (x) U_t(g) that depend on both.
class Family {
public:
	/// Throws ValidationError when L is not a Lie algebra or tau is not a
	/// representation of it.
	Family(LieAlgebra L, Representation R);

	[[nodiscard]] const LieAlgebra& algebra() const { return L_; }
	[[nodiscard]] const Representation& representation() const { return R_; }
	[[nodiscard]] const Enveloping& enveloping() const { return *U_; }
	[[nodiscard]] int n() const { return L_.dimension(); }
	[[nodiscard]] int d() const { return R_.d; }
	[[nodiscard]] const QMatrix& tau(int i) const { return R_.tau[static_cast<std::size_t>(i)]; }

	[[nodiscard]] MatPoly zero() const;
	[[nodiscard]] MatPoly identity() const;
	/// Id (x) a.
	[[nodiscard]] MatPoly scalar(const SymPoly& a) const;
	/// E_pq (x) m.
	[[nodiscard]] MatPoly unit(int p, int q, const Monomial& m) const;

	/// L_X(A) = [tau(X_i), A] + {X_i, A} entrywise.
	[[nodiscard]] MatPoly classical_action(int i, const MatPoly& a) const;
	[[nodiscard]] bool is_classical_invariant(const MatPoly& a) const;

	/// t [tau(X_i), U] + (X_i U - U X_i) entrywise in U_t(g); t times the
	/// infinitesimal action, and the familiar criterion at t = 1.
	[[nodiscard]] MatUE quantum_action(int i, const MatUE& u) const;
	[[nodiscard]] bool is_quantum_invariant(const MatUE& u) const;

	/// Basis of the invariant matrix polynomials of degree <= D, solved one
	/// homogeneous degree at a time; lowest degree first.
	[[nodiscard]] std::vector<MatPoly> invariant_basis(int D) const;

	/// {A, B} = A_i B_j (x) {a^i, b^j}.
	[[nodiscard]] MatPoly nc_poisson(const MatPoly& a, const MatPoly& b) const;
	/// Phi(A, B) = A_i B_j (x) phi(a^i, b^j).
	[[nodiscard]] MatPoly phi(const MatPoly& a, const MatPoly& b) const;
	/// sum_k d^k(A) tau(X_k).
	[[nodiscard]] MatPoly nabla(const MatPoly& a) const;
	/// sum_k tau(X_k) d^k(A).
	[[nodiscard]] MatPoly nabla_prime(const MatPoly& a) const;
	/// A (x) c^j_ij d^i a.
	[[nodiscard]] MatPoly chern_c1(const MatPoly& a) const;

	/// Id (x) I_PBW.
	[[nodiscard]] MatUE fpbw(const MatPoly& a) const;
	[[nodiscard]] MatUE fpbw(const MatPolyT& a) const;
	[[nodiscard]] MatPolyT fpbw_inverse(const MatUE& u) const;
	[[nodiscard]] MatUE mat_mul(const MatUE& a, const MatUE& b) const;

	/// (A_i (x) a^i) *_t (B_j (x) b^j) = A_i B_j (x) (a^i *_t b^j).
	[[nodiscard]] MatPolyT star_product(const MatPoly& a, const MatPoly& b) const;
	/// t^k coefficient of the family star product.
	[[nodiscard]] MatPoly star_coefficient(const MatPoly& a, const MatPoly& b, unsigned k) const;

	/// {E_pq (x) m : deg m <= D}, positions outermost, monomials ascending.
	[[nodiscard]] std::vector<MatPoly> spanning_set(int D) const;

private:
	template <class F>
	MatPoly lift_bilinear(const MatPoly& a, const MatPoly& b, F&& f) const;
	void check(const MatPoly& a) const;

	LieAlgebra L_;
	Representation R_;
	std::unique_ptr<Enveloping> U_;
};

/// Entrywise transport of the polynomial factor to the new basis.
MatPoly transport(const MatPoly& a, const BasisChange& change);

/// The same family described in the basis X~_j = T(k, j) X_k, with tau
/// transported alongside.
Family change_basis(const Family& F, const BasisChange& change);

} // namespace famalg
