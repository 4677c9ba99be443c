#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "famalg/family.hpp"

namespace famalg {

/// A multilinear map A^{(x)k} -> A on A = End(V) (x) S(g), kept as an
/// evaluator rather than a tensor. The label records how it was built.
class Cochain {
public:
	using Args = std::span<const MatPoly>;
	using Fn = std::function<MatPoly(Args)>;

	Cochain(int arity, std::string label, Fn fn);

	[[nodiscard]] int arity() const { return arity_; }
	[[nodiscard]] const std::string& label() const { return label_; }

	/// Throws DimensionError when the argument count differs from the arity.
	MatPoly operator()(Args args) const;
	MatPoly operator()(std::initializer_list<MatPoly> args) const;

private:
	int arity_;
	std::string label_;
	Fn fn_;
};

/// (d_H f)(a_0..a_n) = a_0 f(a_1..a_n) + sum_k (-1)^k f(.., a_{k-1}a_k, ..)
///                     + (-1)^{n+1} f(a_0..a_{n-1}) a_n,
/// with the products taken by the 2-cochain mu.
Cochain d_hochschild(const Cochain& f, const Cochain& mu);

/// (f1 o f2)(a_1..a_{k+l-1}) =
///   sum_{i=0}^{k-1} (-1)^{(k-i-1)(l-1)} f1(a_1..a_i, f2(a_{i+1}..a_{i+l}), ..).
Cochain circ(const Cochain& f1, const Cochain& f2);

/// f1 o f2 - (-1)^{(k-1)(l-1)} f2 o f1.
Cochain gerstenhaber_bracket(const Cochain& f1, const Cochain& f2);

Cochain operator+(const Cochain& f, const Cochain& g);
Cochain operator-(const Cochain& f, const Cochain& g);
Cochain operator*(const Rational& s, const Cochain& f);

/// Named cochains of a family. Each keeps a reference to F, which must
/// outlive it.
namespace atoms {

Cochain identity(const Family& F);
/// mu(A, B) = AB.
Cochain mu(const Family& F);
/// P(A, B) = {A, B}.
Cochain poisson(const Family& F);
/// Phi(A, B) = A_i B_j (x) phi(a^i, b^j).
Cochain phi(const Family& F);
Cochain nabla(const Family& F);
Cochain nabla_prime(const Family& F);
Cochain c1(const Family& F);
/// m_k(A, B): t^k coefficient of the family star product.
Cochain star(const Family& F, unsigned k);

} // namespace atoms

} // namespace famalg
