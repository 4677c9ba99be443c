#include "famalg/matrix.hpp"

#include <algorithm>

namespace famalg {

namespace {

template <class E>
SquareMatrix<E> commutative_product(const SquareMatrix<E>& a, const SquareMatrix<E>& b)
{
	a.check_same(b);
	const int d = a.dim();
	SquareMatrix<E> out(d, E(a(0, 0).generator_count()));
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q) {
			const E& x = a(p, q);
			if (x.is_zero())
				continue;
			for (int r = 0; r < d; ++r)
				if (!b(q, r).is_zero())
					out(p, r) += x * b(q, r);
		}
	return out;
}

template <class E>
SquareMatrix<E> left_constant(const QMatrix& c, const SquareMatrix<E>& a)
{
	const int d = a.dim();
	if (c.rows() != d || c.cols() != d)
		throw DimensionError("constant matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
		                     ", expected " + std::to_string(d) + "x" + std::to_string(d));
	SquareMatrix<E> out(d, E(a(0, 0).generator_count()));
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q) {
			if (c(p, q).is_zero())
				continue;
			for (int r = 0; r < d; ++r)
				if (!a(q, r).is_zero())
					out(p, r) += a(q, r) * c(p, q);
		}
	return out;
}

template <class E>
SquareMatrix<E> right_constant(const SquareMatrix<E>& a, const QMatrix& c)
{
	const int d = a.dim();
	if (c.rows() != d || c.cols() != d)
		throw DimensionError("constant matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
		                     ", expected " + std::to_string(d) + "x" + std::to_string(d));
	SquareMatrix<E> out(d, E(a(0, 0).generator_count()));
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q) {
			if (a(p, q).is_zero())
				continue;
			for (int r = 0; r < d; ++r)
				if (!c(q, r).is_zero())
					out(p, r) += a(p, q) * c(q, r);
		}
	return out;
}

template <class E, class F>
std::string matrix_string(const SquareMatrix<E>& a, F&& entry)
{
	std::string out = "[";
	for (int p = 0; p < a.dim(); ++p) {
		out += p ? ", [" : "[";
		for (int q = 0; q < a.dim(); ++q) {
			if (q)
				out += ", ";
			out += entry(a(p, q));
		}
		out += "]";
	}
	return out + "]";
}

} // namespace

MatPoly mat_mul(const MatPoly& a, const MatPoly& b) { return commutative_product(a, b); }

MatPolyT mat_mul(const MatPolyT& a, const MatPolyT& b) { return commutative_product(a, b); }

MatUE mat_mul(const Enveloping& U, const MatUE& a, const MatUE& b)
{
	a.check_same(b);
	const int d = a.dim();
	MatUE out(d, U.zero());
	for (int p = 0; p < d; ++p)
		for (int q = 0; q < d; ++q) {
			if (a(p, q).is_zero())
				continue;
			for (int r = 0; r < d; ++r)
				if (!b(q, r).is_zero())
					out(p, r) += U.multiply(a(p, q), b(q, r));
		}
	return out;
}

MatPoly operator*(const QMatrix& c, const MatPoly& a) { return left_constant(c, a); }
MatPoly operator*(const MatPoly& a, const QMatrix& c) { return right_constant(a, c); }
MatUE operator*(const QMatrix& c, const MatUE& a) { return left_constant(c, a); }
MatUE operator*(const MatUE& a, const QMatrix& c) { return right_constant(a, c); }

MatPoly tensor(const QMatrix& A, const SymPoly& a)
{
	if (!A.is_square())
		throw DimensionError("matrix factor must be square");
	MatPoly out(A.rows(), SymPoly(a.generator_count()));
	for (int p = 0; p < A.rows(); ++p)
		for (int q = 0; q < A.cols(); ++q)
			if (!A(p, q).is_zero())
				out(p, q) = A(p, q) * a;
	return out;
}

MatPoly scalar_matrix(int d, const SymPoly& a) { return tensor(QMatrix::identity(d), a); }

int degree(const MatPoly& a)
{
	int deg = -1;
	for (const auto& e : a.entries())
		deg = std::max(deg, e.degree());
	return deg;
}

int generator_count(const MatPoly& a) { return a(0, 0).generator_count(); }

MatPoly t_coefficient(const MatPolyT& a, unsigned k)
{
	MatPoly out(a.dim(), SymPoly(a(0, 0).generator_count()));
	for (int p = 0; p < a.dim(); ++p)
		for (int q = 0; q < a.dim(); ++q)
			out(p, q) = t_coefficient(a(p, q), k);
	return out;
}

MatPoly specialize(const MatUE& a, const Rational& t)
{
	MatPoly out(a.dim(), SymPoly(a(0, 0).generator_count()));
	for (int p = 0; p < a.dim(); ++p)
		for (int q = 0; q < a.dim(); ++q)
			out(p, q) = a(p, q).specialize(t);
	return out;
}

std::string to_string(const MatPoly& a, const NameList& names)
{
	return matrix_string(a, [&](const SymPoly& e) { return to_string(e, names); });
}

std::string to_string(const MatPolyT& a, const NameList& names)
{
	return matrix_string(a, [&](const SymPolyT& e) { return to_string(e, names); });
}

std::string to_string(const MatUE& a, const NameList& names)
{
	return matrix_string(a, [&](const UEElement& e) { return to_string(e, names); });
}

} // namespace famalg
