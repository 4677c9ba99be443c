#pragma once

#include <string>
#include <vector>

#include "famalg/rational.hpp"

namespace famalg {

/// Dense matrix over Q.
class QMatrix {
public:
	QMatrix() = default;
	QMatrix(int rows, int cols);
	/// Row-major initializer; every row must have the same length.
	QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

	static QMatrix identity(int n);
	static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
	static QMatrix diagonal(const std::vector<Rational>& d);
	/// Column vector.
	static QMatrix column(const std::vector<Rational>& v);

	[[nodiscard]] int rows() const { return rows_; }
	[[nodiscard]] int cols() const { return cols_; }
	[[nodiscard]] bool is_square() const { return rows_ == cols_; }

	Rational& operator()(int r, int c) { return data_[index(r, c)]; }
	const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

	[[nodiscard]] bool is_zero() const;
	[[nodiscard]] QMatrix transpose() const;
	[[nodiscard]] std::vector<Rational> column_values(int c) const;

	QMatrix& operator+=(const QMatrix& o);
	QMatrix& operator-=(const QMatrix& o);
	QMatrix& operator*=(const Rational& s);
	friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
	friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
	friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
	friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
	friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
	friend bool operator==(const QMatrix&, const QMatrix&) = default;

	[[nodiscard]] std::string to_string() const;

private:
	[[nodiscard]] std::size_t index(int r, int c) const
	{
		return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
	}

	int rows_ = 0;
	int cols_ = 0;
	std::vector<Rational> data_;
};

/// Commutator AB - BA.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Row echelon data from fraction-free (Bareiss) elimination.
struct Echelon {
	int rank = 0;
	/// Pivot column of each of the first `rank` rows.
	std::vector<int> pivot_columns;
	/// Integer-scaled echelon form; rows below `rank` are zero.
	QMatrix form;
};

/// Fraction-free Gaussian elimination. Each row is first scaled by the lcm of
/// its denominators, then eliminated with Bareiss' exact-division update.
Echelon bareiss_echelon(const QMatrix& m);

[[nodiscard]] int rank(const QMatrix& m);

/// Exact basis of {v : M v = 0}, one column vector per basis element. Each
/// vector has a 1 in its free coordinate and 0 in the other free coordinates.
std::vector<QMatrix> nullspace(const QMatrix& m);

/// Throws SingularMatrixError when m is not invertible.
QMatrix inverse(const QMatrix& m);

Rational determinant(const QMatrix& m);

} // namespace famalg
