#include "famalg/qmatrix.hpp"

#include <utility>

#include "famalg/errors.hpp"

namespace famalg {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
	if (rows < 0 || cols < 0)
		throw DimensionError("negative matrix dimension");
	data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
	rows_ = static_cast<int>(rows.size());
	cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
	for (const auto& row : rows) {
		if (static_cast<int>(row.size()) != cols_)
			throw DimensionError("ragged matrix initializer");
		data_.insert(data_.end(), row.begin(), row.end());
	}
}

QMatrix QMatrix::identity(int n)
{
	QMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m(i, i) = Rational(1);
	return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rational>& d)
{
	QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
	for (std::size_t i = 0; i < d.size(); ++i)
		m(static_cast<int>(i), static_cast<int>(i)) = d[i];
	return m;
}

QMatrix QMatrix::column(const std::vector<Rational>& v)
{
	QMatrix m(static_cast<int>(v.size()), 1);
	for (std::size_t i = 0; i < v.size(); ++i)
		m(static_cast<int>(i), 0) = v[i];
	return m;
}

bool QMatrix::is_zero() const
{
	for (const auto& x : data_)
		if (!x.is_zero())
			return false;
	return true;
}

QMatrix QMatrix::transpose() const
{
	QMatrix t(cols_, rows_);
	for (int r = 0; r < rows_; ++r)
		for (int c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

std::vector<Rational> QMatrix::column_values(int c) const
{
	std::vector<Rational> v;
	v.reserve(static_cast<std::size_t>(rows_));
	for (int r = 0; r < rows_; ++r)
		v.push_back((*this)(r, c));
	return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix sum of mismatched shapes");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] += o.data_[i];
	return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix difference of mismatched shapes");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] -= o.data_[i];
	return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s)
{
	for (auto& x : data_)
		x *= s;
	return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
	if (a.cols_ != b.rows_)
		throw DimensionError("matrix product of mismatched shapes");
	QMatrix out(a.rows_, b.cols_);
	for (int i = 0; i < a.rows_; ++i)
		for (int k = 0; k < a.cols_; ++k) {
			const Rational& x = a(i, k);
			if (x.is_zero())
				continue;
			for (int j = 0; j < b.cols_; ++j)
				out(i, j) += x * b(k, j);
		}
	return out;
}

std::string QMatrix::to_string() const
{
	std::string out = "[";
	for (int r = 0; r < rows_; ++r) {
		out += r == 0 ? "[" : ", [";
		for (int c = 0; c < cols_; ++c) {
			if (c > 0)
				out += ", ";
			out += (*this)(r, c).to_string();
		}
		out += "]";
	}
	return out + "]";
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Echelon bareiss_echelon(const QMatrix& m)
{
	const int rows = m.rows();
	const int cols = m.cols();
	std::vector<mpz_class> z(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
	auto at = [&](int r, int c) -> mpz_class& {
		return z[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
	};

	for (int r = 0; r < rows; ++r) {
		mpz_class scale = 1;
		for (int c = 0; c < cols; ++c)
			mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
		for (int c = 0; c < cols; ++c) {
			const mpq_class& q = m(r, c).raw();
			at(r, c) = q.get_num() * (scale / q.get_den());
		}
	}

	Echelon e;
	mpz_class prev = 1;
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c) {
		int p = r;
		while (p < rows && sgn(at(p, c)) == 0)
			++p;
		if (p == rows)
			continue;
		if (p != r)
			for (int j = 0; j < cols; ++j)
				std::swap(at(p, j), at(r, j));
		const mpz_class pivot = at(r, c);
		for (int i = r + 1; i < rows; ++i) {
			const mpz_class lead = at(i, c);
			for (int j = c + 1; j < cols; ++j) {
				mpz_class v = pivot * at(i, j) - lead * at(r, j);
				mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
				at(i, j) = std::move(v);
			}
			at(i, c) = 0;
		}
		prev = pivot;
		e.pivot_columns.push_back(c);
		++r;
	}
	e.rank = r;
	e.form = QMatrix(rows, cols);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < cols; ++j)
			e.form(i, j) = Rational(mpq_class(at(i, j)));
	return e;
}

int rank(const QMatrix& m) { return bareiss_echelon(m).rank; }

std::vector<QMatrix> nullspace(const QMatrix& m)
{
	const int cols = m.cols();
	Echelon e = bareiss_echelon(m);
	std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
	for (int c : e.pivot_columns)
		is_pivot[static_cast<std::size_t>(c)] = true;

	std::vector<QMatrix> basis;
	for (int f = 0; f < cols; ++f) {
		if (is_pivot[static_cast<std::size_t>(f)])
			continue;
		std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
		x[static_cast<std::size_t>(f)] = Rational(1);
		for (int k = e.rank - 1; k >= 0; --k) {
			int pc = e.pivot_columns[static_cast<std::size_t>(k)];
			Rational acc(0);
			for (int j = pc + 1; j < cols; ++j)
				if (!e.form(k, j).is_zero() && !x[static_cast<std::size_t>(j)].is_zero())
					acc += e.form(k, j) * x[static_cast<std::size_t>(j)];
			x[static_cast<std::size_t>(pc)] = -acc / e.form(k, pc);
		}
		basis.push_back(QMatrix::column(x));
	}
	return basis;
}

QMatrix inverse(const QMatrix& m)
{
	if (!m.is_square())
		throw DimensionError("inverse of non-square matrix");
	const int n = m.rows();
	QMatrix a = m;
	QMatrix inv = QMatrix::identity(n);
	for (int c = 0; c < n; ++c) {
		int p = c;
		while (p < n && a(p, c).is_zero())
			++p;
		if (p == n)
			throw SingularMatrixError("matrix is singular");
		if (p != c)
			for (int j = 0; j < n; ++j) {
				std::swap(a(p, j), a(c, j));
				std::swap(inv(p, j), inv(c, j));
			}
		Rational s = a(c, c).inverse();
		for (int j = 0; j < n; ++j) {
			a(c, j) *= s;
			inv(c, j) *= s;
		}
		for (int i = 0; i < n; ++i) {
			if (i == c || a(i, c).is_zero())
				continue;
			Rational f = a(i, c);
			for (int j = 0; j < n; ++j) {
				a(i, j) -= f * a(c, j);
				inv(i, j) -= f * inv(c, j);
			}
		}
	}
	return inv;
}

Rational determinant(const QMatrix& m)
{
	if (!m.is_square())
		throw DimensionError("determinant of non-square matrix");
	const int n = m.rows();
	QMatrix a = m;
	Rational det(1);
	for (int c = 0; c < n; ++c) {
		int p = c;
		while (p < n && a(p, c).is_zero())
			++p;
		if (p == n)
			return Rational(0);
		if (p != c) {
			for (int j = 0; j < n; ++j)
				std::swap(a(p, j), a(c, j));
			det = -det;
		}
		det *= a(c, c);
		for (int i = c + 1; i < n; ++i) {
			if (a(i, c).is_zero())
				continue;
			Rational f = a(i, c) / a(c, c);
			for (int j = c; j < n; ++j)
				a(i, j) -= f * a(c, j);
		}
	}
	return det;
}

} // namespace famalg
