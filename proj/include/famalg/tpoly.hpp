#pragma once

#include <string>
#include <vector>

#include "famalg/rational.hpp"

namespace famalg {

/// Dense univariate polynomial in the deformation parameter t, coefficients
/// in Q. Trailing zeros are always trimmed, so zero has no coefficients.
class TPoly {
public:
	TPoly() = default;
	TPoly(const Rational& c);
	TPoly(int c) : TPoly(Rational(c)) {}

	/// c * t^k
	static TPoly monomial(const Rational& c, unsigned k);
	static TPoly t() { return monomial(Rational(1), 1); }

	[[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
	[[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
	/// -1 for the zero polynomial.
	[[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	[[nodiscard]] Rational coefficient(unsigned k) const;
	[[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
	[[nodiscard]] Rational evaluate(const Rational& t) const;

	TPoly& operator+=(const TPoly& o);
	TPoly& operator-=(const TPoly& o);
	TPoly& operator*=(const TPoly& o);
	TPoly& operator*=(const Rational& c);

	friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
	friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
	friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
	friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
	friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
	friend TPoly operator-(TPoly a)
	{
		a *= Rational(-1);
		return a;
	}
	friend bool operator==(const TPoly&, const TPoly&) = default;

	/// Human-readable form, e.g. "1 - 1/2*t^2".
	[[nodiscard]] std::string to_string() const;

private:
	void trim();
	std::vector<Rational> coeffs_;
};

} // namespace famalg
