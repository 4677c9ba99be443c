#pragma once

#include <map>
#include <string>
#include <vector>

#include "famalg/errors.hpp"
#include "famalg/monomial.hpp"
#include "famalg/rational.hpp"
#include "famalg/tpoly.hpp"

namespace famalg {

/// Sparse commutative polynomial in n generators with coefficients in C
/// (Rational for S(g), TPoly for S(g)[t]). Zero coefficients are never
/// stored, so the term map is canonical.
template <class C>
class Polynomial {
public:
	using Coefficient = C;
	using TermMap = std::map<Monomial, C>;

	explicit Polynomial(int n = 0) : n_(n)
	{
		if (n < 0 || n > kMaxGenerators)
			throw DimensionError("unsupported generator count " + std::to_string(n));
	}

	static Polynomial constant(int n, const C& c)
	{
		Polynomial p(n);
		p.add_term(Monomial(), c);
		return p;
	}
	static Polynomial one(int n) { return constant(n, C(1)); }
	static Polynomial generator(int n, int i)
	{
		check_index(n, i);
		Polynomial p(n);
		p.add_term(Monomial::generator(i), C(1));
		return p;
	}
	static Polynomial term(int n, const Monomial& m, const C& c)
	{
		Polynomial p(n);
		p.add_term(m, c);
		return p;
	}

	[[nodiscard]] int generator_count() const { return n_; }
	[[nodiscard]] bool is_zero() const { return terms_.empty(); }
	[[nodiscard]] std::size_t size() const { return terms_.size(); }
	[[nodiscard]] const TermMap& terms() const { return terms_; }

	/// Total degree; -1 for the zero polynomial.
	[[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

	[[nodiscard]] C coefficient(const Monomial& m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? C() : it->second;
	}

	void add_term(const Monomial& m, const C& c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	[[nodiscard]] Polynomial homogeneous_part(int degree) const
	{
		Polynomial out(n_);
		for (const auto& [m, c] : terms_)
			if (m.degree() == degree)
				out.terms_.emplace_hint(out.terms_.end(), m, c);
		return out;
	}

	/// Formal partial derivative with respect to generator i (0-based).
	[[nodiscard]] Polynomial partial(int i) const
	{
		check_index(n_, i);
		Polynomial out(n_);
		for (const auto& [m, c] : terms_) {
			int e = m[i];
			if (e == 0)
				continue;
			Monomial d = m;
			d.decrement(i);
			C k = c;
			k *= Rational(e);
			out.terms_.emplace(d, std::move(k));
		}
		return out;
	}

	Polynomial& operator+=(const Polynomial& o)
	{
		check_compatible(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}
	Polynomial& operator-=(const Polynomial& o)
	{
		check_compatible(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}
	Polynomial& operator*=(const Rational& s)
	{
		if (s.is_zero()) {
			terms_.clear();
			return *this;
		}
		for (auto& [m, c] : terms_)
			c *= s;
		return *this;
	}
	/// Multiply by a coefficient-ring scalar.
	[[nodiscard]] Polynomial scaled(const C& s) const
	{
		Polynomial out(n_);
		for (const auto& [m, c] : terms_)
			out.add_term(m, c * s);
		return out;
	}

	friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
	friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
	friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
	friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

	friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
	{
		a.check_compatible(b);
		Polynomial out(a.n_);
		if (a.is_zero() || b.is_zero())
			return out;
		for (const auto& [ma, ca] : a.terms_)
			for (const auto& [mb, cb] : b.terms_)
				out.add_term(ma * mb, ca * cb);
		return out;
	}
	Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

	friend bool operator==(const Polynomial& a, const Polynomial& b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}

	[[nodiscard]] Polynomial pow(unsigned e) const
	{
		Polynomial out = one(n_);
		for (unsigned k = 0; k < e; ++k)
			out = out * *this;
		return out;
	}

private:
	static void check_index(int n, int i)
	{
		if (i < 0 || i >= n)
			throw IndexError("generator index " + std::to_string(i + 1) + " out of range 1.." +
			                 std::to_string(n));
	}
	void check_compatible(const Polynomial& o) const
	{
		if (n_ != o.n_)
			throw DimensionError("polynomials over " + std::to_string(n_) + " and " +
			                     std::to_string(o.n_) + " generators");
	}

	int n_;
	TermMap terms_;
};

/// Element of S(g) over Q.
using SymPoly = Polynomial<Rational>;
/// Element of S(g)[t].
using SymPolyT = Polynomial<TPoly>;

SymPolyT lift_to_t(const SymPoly& p);
/// Coefficient of t^k.
SymPoly t_coefficient(const SymPolyT& p, unsigned k);
SymPoly evaluate_t(const SymPolyT& p, const Rational& t);
/// Highest power of t occurring; -1 for zero.
int t_degree(const SymPolyT& p);

/// Generator names used for printing and parsing.
using NameList = std::vector<std::string>;

std::string to_string(const Monomial& m, const NameList& names);
std::string to_string(const SymPoly& p, const NameList& names);
std::string to_string(const SymPolyT& p, const NameList& names);

} // namespace famalg
