#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "famalg/lie_algebra.hpp"
#include "famalg/polynomial.hpp"

namespace famalg {

/// Element of U_t(g) = T(g)/(XY - YX - t[X,Y]) in PBW normal form: a
/// combination of ordered monomials X_1^{e_1}...X_n^{e_n} (basis order) with
/// coefficients in Q[t].
class UEElement {
public:
	explicit UEElement(int n = 0) : terms_(n) {}
	/// Reads each monomial of `normal_form` as an ordered PBW monomial.
	explicit UEElement(SymPolyT normal_form) : terms_(std::move(normal_form)) {}

	[[nodiscard]] const SymPolyT& terms() const { return terms_; }
	[[nodiscard]] bool is_zero() const { return terms_.is_zero(); }
	[[nodiscard]] int generator_count() const { return terms_.generator_count(); }
	/// Filtration degree (ignores t).
	[[nodiscard]] int degree() const { return terms_.degree(); }

	/// Specializing t := value. At t = 0 this is the commutative image in S(g).
	[[nodiscard]] SymPoly specialize(const Rational& t) const { return evaluate_t(terms_, t); }

	UEElement& operator+=(const UEElement& o)
	{
		terms_ += o.terms_;
		return *this;
	}
	UEElement& operator-=(const UEElement& o)
	{
		terms_ -= o.terms_;
		return *this;
	}
	UEElement& operator*=(const Rational& s)
	{
		terms_ *= s;
		return *this;
	}
	friend UEElement operator+(UEElement a, const UEElement& b) { return a += b; }
	friend UEElement operator-(UEElement a, const UEElement& b) { return a -= b; }
	friend UEElement operator*(UEElement a, const Rational& s) { return a *= s; }
	friend UEElement operator*(const Rational& s, UEElement a) { return a *= s; }
	friend bool operator==(const UEElement&, const UEElement&) = default;

private:
	SymPolyT terms_;
};

/// Ordered monomials with t-polynomial coefficients, e.g. "e*f - 1/2*t*h".
std::string to_string(const UEElement& u, const NameList& names);

/// U_t(g) for a fixed Lie algebra, together with the symmetrization map
/// I_PBW: S(g) -> U_t(g), its inverse, and the pulled-back star product.
///
/// Products are reduced to normal form by rewriting X_j X_i -> X_i X_j +
/// t sum_k c^k_ji X_k for j > i; the tensor algebra is never materialized.
/// Rewrites, symmetrized monomials and star products of monomial pairs are
/// memoized. The caches are guarded by
/// a mutex, so one instance may be shared between threads.
class Enveloping {
public:
	explicit Enveloping(LieAlgebra L);
	Enveloping(const Enveloping&) = delete;
	Enveloping& operator=(const Enveloping&) = delete;

	[[nodiscard]] const LieAlgebra& algebra() const { return L_; }
	[[nodiscard]] int dimension() const { return L_.dimension(); }

	[[nodiscard]] UEElement zero() const { return UEElement(L_.dimension()); }
	[[nodiscard]] UEElement one() const;
	[[nodiscard]] UEElement generator(int i) const;
	/// Ordered monomial X_1^{e_1}...X_n^{e_n} with coefficient 1.
	[[nodiscard]] UEElement ordered(const Monomial& m) const;

	[[nodiscard]] UEElement multiply(const UEElement& u, const UEElement& v) const;
	/// uv - vu
	[[nodiscard]] UEElement commutator(const UEElement& u, const UEElement& v) const;

	/// I_PBW: each monomial X_{i_1}...X_{i_k} maps to the average of all its
	/// orderings. Linear, extended Q[t]-linearly to S(g)[t].
	[[nodiscard]] UEElement pbw_symmetrize(const SymPoly& a) const;
	[[nodiscard]] UEElement pbw_symmetrize(const SymPolyT& a) const;

	/// I_PBW^{-1}, by peeling off the top-degree symbol and recursing on the
	/// strictly lower-degree remainder.
	[[nodiscard]] SymPolyT pbw_inverse(const UEElement& u) const;

	/// a *_t b = I^{-1}(I(a) I(b)).
	[[nodiscard]] SymPolyT star_product(const SymPoly& a, const SymPoly& b) const;
	[[nodiscard]] SymPolyT star_product(const SymPolyT& a, const SymPolyT& b) const;

	/// Coefficient of t^k in a *_t b.
	[[nodiscard]] SymPoly star_coefficient(const SymPoly& a, const SymPoly& b, unsigned k) const;

	/// Coefficients m_0, m_1, ... of a *_t b, through the last nonzero one.
	[[nodiscard]] std::vector<SymPoly> star_expansion(const SymPoly& a, const SymPoly& b) const;

private:
	/// Normal form of (ordered monomial m) * X_i.
	SymPolyT times_generator(const Monomial& m, int i) const;
	SymPolyT right_multiply(const SymPolyT& u, int i) const;
	SymPolyT symmetrized_monomial(const Monomial& m) const;
	SymPolyT monomial_star(const Monomial& a, const Monomial& b) const;
	void check(const SymPolyT& p) const;

	LieAlgebra L_;
	mutable std::mutex mutex_;
	mutable std::map<std::pair<Monomial, int>, SymPolyT> rewrite_cache_;
	mutable std::map<Monomial, SymPolyT> symmetrize_cache_;
	mutable std::map<std::pair<Monomial, Monomial>, SymPolyT> star_cache_;
};

} // namespace famalg
