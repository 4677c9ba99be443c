#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace famalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
	Rational() = default;
	Rational(int v) : value_(v) {}
	Rational(long v) : value_(v) {}
	Rational(long long v) : value_(static_cast<long>(v)) {}
	Rational(long num, long den);
	explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

	/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
	static Rational parse(std::string_view text);

	[[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
	[[nodiscard]] bool is_one() const { return value_ == 1; }
	[[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
	[[nodiscard]] int sign() const { return sgn(value_); }

	[[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
	[[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
	[[nodiscard]] const mpq_class& raw() const { return value_; }

	/// "p" for integers, "p/q" otherwise.
	[[nodiscard]] std::string to_string() const { return value_.get_str(); }

	Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
	Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
	Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
	Rational& operator/=(const Rational& o);

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
	friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

	friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

	[[nodiscard]] Rational inverse() const;
	[[nodiscard]] Rational pow(unsigned e) const;

private:
	mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace famalg

template <>
struct std::hash<famalg::Rational> {
	std::size_t operator()(const famalg::Rational& r) const noexcept;
};
