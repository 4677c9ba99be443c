#include "famalg/enveloping.hpp"

#include <algorithm>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

std::string coefficient_prefix(const TPoly& c, bool first, bool unit_monomial)
{
	int nonzero = 0;
	for (const auto& x : c.coefficients())
		nonzero += x.is_zero() ? 0 : 1;
	if (nonzero != 1) {
		std::string out = first ? "" : " + ";
		return out + "(" + c.to_string() + ")" + (unit_monomial ? "" : "*");
	}
	// A single c*t^k prints inline with its sign.
	unsigned k = static_cast<unsigned>(c.degree());
	Rational r = c.coefficient(k);
	Rational mag = r.sign() < 0 ? -r : r;
	std::string out = first ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
	std::string body;
	if (!mag.is_one() || (k == 0 && unit_monomial))
		body = mag.to_string();
	if (k > 0) {
		if (!body.empty())
			body += "*";
		body += k == 1 ? "t" : "t^" + std::to_string(k);
	}
	if (!unit_monomial && !body.empty())
		body += "*";
	return out + body;
}

} // namespace

std::string to_string(const UEElement& u, const NameList& names)
{
	if (u.is_zero())
		return "0";
	std::string out;
	bool first = true;
	const auto& terms = u.terms().terms();
	for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
		const auto& [m, c] = *it;
		bool unit = m.degree() == 0;
		out += coefficient_prefix(c, first, unit);
		if (!unit)
			out += to_string(m, names);
		first = false;
	}
	return out;
}

Enveloping::Enveloping(LieAlgebra L) : L_(std::move(L)) {}

UEElement Enveloping::one() const { return UEElement(SymPolyT::one(L_.dimension())); }

UEElement Enveloping::generator(int i) const { return UEElement(SymPolyT::generator(L_.dimension(), i)); }

UEElement Enveloping::ordered(const Monomial& m) const
{
	return UEElement(SymPolyT::term(L_.dimension(), m, TPoly(1)));
}

void Enveloping::check(const SymPolyT& p) const
{
	if (p.generator_count() != L_.dimension())
		throw DimensionError("element has " + std::to_string(p.generator_count()) + " generators, algebra has " +
		                     std::to_string(L_.dimension()));
}

SymPolyT Enveloping::times_generator(const Monomial& m, int i) const
{
	const auto key = std::make_pair(m, i);
	{
		std::lock_guard lock(mutex_);
		if (auto it = rewrite_cache_.find(key); it != rewrite_cache_.end())
			return it->second;
	}
	const int n = L_.dimension();
	SymPolyT result(n);
	const int j = m.last_generator();
	if (j <= i) {
		Monomial next = m;
		next.increment(i);
		result.add_term(next, TPoly(1));
	} else {
		// m = m' X_j with j the largest letter, and X_j X_i = X_i X_j + t [X_j, X_i].
		Monomial prefix = m;
		prefix.decrement(j);
		result = right_multiply(times_generator(prefix, i), j);
		for (int k = 0; k < n; ++k) {
			const Rational& c = L_.c(j, i, k);
			if (c.is_zero())
				continue;
			result += times_generator(prefix, k).scaled(TPoly::monomial(c, 1));
		}
	}
	std::lock_guard lock(mutex_);
	return rewrite_cache_.try_emplace(key, std::move(result)).first->second;
}

SymPolyT Enveloping::right_multiply(const SymPolyT& u, int i) const
{
	SymPolyT out(L_.dimension());
	for (const auto& [m, c] : u.terms())
		out += times_generator(m, i).scaled(c);
	return out;
}

UEElement Enveloping::multiply(const UEElement& u, const UEElement& v) const
{
	check(u.terms());
	check(v.terms());
	SymPolyT out(L_.dimension());
	if (u.is_zero() || v.is_zero())
		return UEElement(out);
	for (const auto& [m, c] : v.terms().terms()) {
		SymPolyT w = u.terms();
		for (int letter : m.word())
			w = right_multiply(w, letter);
		out += w.scaled(c);
	}
	return UEElement(std::move(out));
}

UEElement Enveloping::commutator(const UEElement& u, const UEElement& v) const
{
	return multiply(u, v) - multiply(v, u);
}

SymPolyT Enveloping::symmetrized_monomial(const Monomial& m) const
{
	{
		std::lock_guard lock(mutex_);
		if (auto it = symmetrize_cache_.find(m); it != symmetrize_cache_.end())
			return it->second;
	}
	const int n = L_.dimension();
	SymPolyT sum(n);
	if (m.degree() == 0) {
		sum = SymPolyT::one(n);
	} else {
		// Grouping the k! orderings by their last letter:
		// Sym(m) = 1/k sum_i e_i Sym(m / X_i) X_i.
		for (int i = 0; i < n; ++i) {
			if (m[i] == 0)
				continue;
			Monomial rest = m;
			rest.decrement(i);
			sum += right_multiply(symmetrized_monomial(rest), i).scaled(TPoly(Rational(m[i])));
		}
		sum *= Rational(1, m.degree());
	}

	std::lock_guard lock(mutex_);
	return symmetrize_cache_.try_emplace(m, std::move(sum)).first->second;
}

UEElement Enveloping::pbw_symmetrize(const SymPoly& a) const { return pbw_symmetrize(lift_to_t(a)); }

UEElement Enveloping::pbw_symmetrize(const SymPolyT& a) const
{
	check(a);
	SymPolyT out(L_.dimension());
	for (const auto& [m, c] : a.terms())
		out += symmetrized_monomial(m).scaled(c);
	return UEElement(std::move(out));
}

SymPolyT Enveloping::pbw_inverse(const UEElement& u) const
{
	check(u.terms());
	SymPolyT result(L_.dimension());
	SymPolyT rest = u.terms();
	while (!rest.is_zero()) {
		SymPolyT top = rest.homogeneous_part(rest.degree());
		for (const auto& [m, c] : top.terms()) {
			result.add_term(m, c);
			rest -= symmetrized_monomial(m).scaled(c);
		}
	}
	return result;
}

SymPolyT Enveloping::star_product(const SymPoly& a, const SymPoly& b) const
{
	return star_product(lift_to_t(a), lift_to_t(b));
}

SymPolyT Enveloping::monomial_star(const Monomial& a, const Monomial& b) const
{
	const auto key = std::make_pair(a, b);
	{
		std::lock_guard lock(mutex_);
		if (auto it = star_cache_.find(key); it != star_cache_.end())
			return it->second;
	}
	SymPolyT p = pbw_inverse(multiply(UEElement(symmetrized_monomial(a)), UEElement(symmetrized_monomial(b))));
	std::lock_guard lock(mutex_);
	return star_cache_.try_emplace(key, std::move(p)).first->second;
}

SymPolyT Enveloping::star_product(const SymPolyT& a, const SymPolyT& b) const
{
	check(a);
	check(b);
	// Bilinear over Q[t], so it is assembled from monomial pairs.
	SymPolyT out(L_.dimension());
	for (const auto& [ma, ca] : a.terms())
		for (const auto& [mb, cb] : b.terms())
			out += monomial_star(ma, mb).scaled(ca * cb);
	return out;
}

SymPoly Enveloping::star_coefficient(const SymPoly& a, const SymPoly& b, unsigned k) const
{
	return t_coefficient(star_product(a, b), k);
}

std::vector<SymPoly> Enveloping::star_expansion(const SymPoly& a, const SymPoly& b) const
{
	SymPolyT p = star_product(a, b);
	std::vector<SymPoly> out;
	for (int k = 0; k <= std::max(0, t_degree(p)); ++k)
		out.push_back(t_coefficient(p, static_cast<unsigned>(k)));
	return out;
}

} // namespace famalg
