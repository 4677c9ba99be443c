#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <vector>

#include "famalg/errors.hpp"

namespace famalg {

/// Largest number of generators a polynomial ring may have.
inline constexpr int kMaxGenerators = 16;
inline constexpr int kMaxExponent = 255;

/// Exponent vector X_1^{e_1} ... X_n^{e_n}. Ordered graded-lexicographically:
/// total degree first, then lexicographically with X_1 the most significant.
class Monomial {
public:
	Monomial() { exps_.fill(0); }

	static Monomial generator(int i)
	{
		Monomial m;
		m.set(i, 1);
		return m;
	}

	[[nodiscard]] int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
	[[nodiscard]] int degree() const { return degree_; }

	void set(int i, int e)
	{
		if (i < 0 || i >= kMaxGenerators)
			throw IndexError("generator index out of range");
		if (e < 0 || e > kMaxExponent)
			throw DimensionError("exponent out of supported range");
		degree_ += e - exps_[static_cast<std::size_t>(i)];
		exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
	}
	void increment(int i) { set(i, (*this)[i] + 1); }
	void decrement(int i) { set(i, (*this)[i] - 1); }

	/// Largest generator index with a nonzero exponent, or -1 for the unit.
	[[nodiscard]] int last_generator() const
	{
		for (int i = kMaxGenerators - 1; i >= 0; --i)
			if (exps_[static_cast<std::size_t>(i)] != 0)
				return i;
		return -1;
	}

	/// The generator indices in nondecreasing order, with repetition.
	[[nodiscard]] std::vector<int> word() const
	{
		std::vector<int> w;
		w.reserve(static_cast<std::size_t>(degree_));
		for (int i = 0; i < kMaxGenerators; ++i)
			for (int k = 0; k < exps_[static_cast<std::size_t>(i)]; ++k)
				w.push_back(i);
		return w;
	}

	friend Monomial operator*(const Monomial& a, const Monomial& b)
	{
		Monomial m;
		for (std::size_t i = 0; i < a.exps_.size(); ++i) {
			int e = a.exps_[i] + b.exps_[i];
			if (e > kMaxExponent)
				throw DimensionError("exponent out of supported range");
			m.exps_[i] = static_cast<std::uint8_t>(e);
		}
		m.degree_ = a.degree_ + b.degree_;
		return m;
	}

	friend bool operator==(const Monomial& a, const Monomial& b)
	{
		return a.degree_ == b.degree_ && a.exps_ == b.exps_;
	}
	friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
	{
		if (a.degree_ != b.degree_)
			return a.degree_ <=> b.degree_;
		int c = std::memcmp(a.exps_.data(), b.exps_.data(), a.exps_.size());
		return c <=> 0;
	}

private:
	std::array<std::uint8_t, kMaxGenerators> exps_;
	int degree_ = 0;
};

/// All monomials in n generators of exactly the given degree, in decreasing
/// graded-lex order (X_1^d first).
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// All monomials of degree 0..max_degree, lowest degree first.
std::vector<Monomial> monomials_up_to(int n, int max_degree);

} // namespace famalg
