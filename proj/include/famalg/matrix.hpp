#pragma once

#include <string>
#include <vector>

#include "famalg/enveloping.hpp"
#include "famalg/errors.hpp"
#include "famalg/polynomial.hpp"
#include "famalg/qmatrix.hpp"

namespace famalg {

/// d x d matrix with entries in a commutative-or-not ring E, row-major.
/// Stored entrywise; A_i (x) a^i decompositions are never kept.
template <class E>
class SquareMatrix {
public:
	SquareMatrix() = default;
	SquareMatrix(int d, const E& zero) : d_(d), entries_(static_cast<std::size_t>(d * d), zero)
	{
		if (d < 1)
			throw DimensionError("matrix dimension must be positive, got " + std::to_string(d));
	}

	[[nodiscard]] int dim() const { return d_; }
	E& operator()(int p, int q) { return entries_[index(p, q)]; }
	const E& operator()(int p, int q) const { return entries_[index(p, q)]; }
	[[nodiscard]] const std::vector<E>& entries() const { return entries_; }

	[[nodiscard]] bool is_zero() const
	{
		for (const auto& e : entries_)
			if (!e.is_zero())
				return false;
		return true;
	}

	SquareMatrix& operator+=(const SquareMatrix& o)
	{
		check_same(o);
		for (std::size_t k = 0; k < entries_.size(); ++k)
			entries_[k] += o.entries_[k];
		return *this;
	}
	SquareMatrix& operator-=(const SquareMatrix& o)
	{
		check_same(o);
		for (std::size_t k = 0; k < entries_.size(); ++k)
			entries_[k] -= o.entries_[k];
		return *this;
	}
	SquareMatrix& operator*=(const Rational& s)
	{
		for (auto& e : entries_)
			e *= s;
		return *this;
	}
	friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
	friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
	friend SquareMatrix operator-(SquareMatrix a) { return a *= Rational(-1); }
	friend SquareMatrix operator*(SquareMatrix a, const Rational& s) { return a *= s; }
	friend SquareMatrix operator*(const Rational& s, SquareMatrix a) { return a *= s; }
	friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

	void check_same(const SquareMatrix& o) const
	{
		if (o.d_ != d_)
			throw DimensionError("matrix dimensions " + std::to_string(d_) + " and " + std::to_string(o.d_) +
			                     " differ");
	}

private:
	[[nodiscard]] std::size_t index(int p, int q) const
	{
		if (p < 0 || q < 0 || p >= d_ || q >= d_)
			throw IndexError("matrix position (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
			                 ") out of range");
		return static_cast<std::size_t>(p * d_ + q);
	}

	int d_ = 0;
	std::vector<E> entries_;
};

/// Elements of End(V) (x) S(g).
using MatPoly = SquareMatrix<SymPoly>;
/// Elements of End(V) (x) S(g)[t]; the family star product lands here.
using MatPolyT = SquareMatrix<SymPolyT>;
/// Elements of End(V) (x) U_t(g).
using MatUE = SquareMatrix<UEElement>;

/// Entrywise polynomial product: (AB)_pr = sum_q A_pq B_qr.
MatPoly mat_mul(const MatPoly& a, const MatPoly& b);
MatPolyT mat_mul(const MatPolyT& a, const MatPolyT& b);
/// Product in End(V) (x) U_t(g).
MatUE mat_mul(const Enveloping& U, const MatUE& a, const MatUE& b);

/// Constant matrix times a matrix polynomial, on either side.
MatPoly operator*(const QMatrix& c, const MatPoly& a);
MatPoly operator*(const MatPoly& a, const QMatrix& c);
MatUE operator*(const QMatrix& c, const MatUE& a);
MatUE operator*(const MatUE& a, const QMatrix& c);

/// A (x) a.
MatPoly tensor(const QMatrix& A, const SymPoly& a);
/// Id (x) a.
MatPoly scalar_matrix(int d, const SymPoly& a);

/// Largest entry degree, -1 for the zero matrix.
int degree(const MatPoly& a);
int generator_count(const MatPoly& a);

/// Coefficient of t^k, entrywise.
MatPoly t_coefficient(const MatPolyT& a, unsigned k);
/// t := value, entrywise.
MatPoly specialize(const MatUE& a, const Rational& t);

/// "[[1/2*h, f], [e, -1/2*h]]"
std::string to_string(const MatPoly& a, const NameList& names);
std::string to_string(const MatPolyT& a, const NameList& names);
std::string to_string(const MatUE& a, const NameList& names);

} // namespace famalg
