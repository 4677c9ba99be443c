#include "famalg/polynomial.hpp"

#include <algorithm>

namespace famalg {

namespace {

void fill_degree(int n, int i, int remaining, Monomial& current, std::vector<Monomial>& out)
{
	if (i == n - 1) {
		current.set(i, remaining);
		out.push_back(current);
		current.set(i, 0);
		return;
	}
	for (int e = remaining; e >= 0; --e) {
		current.set(i, e);
		fill_degree(n, i + 1, remaining - e, current, out);
	}
	current.set(i, 0);
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int degree)
{
	std::vector<Monomial> out;
	if (degree < 0)
		return out;
	if (n == 0) {
		if (degree == 0)
			out.emplace_back();
		return out;
	}
	Monomial m;
	fill_degree(n, 0, degree, m, out);
	return out;
}

std::vector<Monomial> monomials_up_to(int n, int max_degree)
{
	std::vector<Monomial> out;
	for (int d = 0; d <= max_degree; ++d) {
		auto part = monomials_of_degree(n, d);
		out.insert(out.end(), part.begin(), part.end());
	}
	return out;
}

SymPolyT lift_to_t(const SymPoly& p)
{
	SymPolyT out(p.generator_count());
	for (const auto& [m, c] : p.terms())
		out.add_term(m, TPoly(c));
	return out;
}

SymPoly t_coefficient(const SymPolyT& p, unsigned k)
{
	SymPoly out(p.generator_count());
	for (const auto& [m, c] : p.terms())
		out.add_term(m, c.coefficient(k));
	return out;
}

SymPoly evaluate_t(const SymPolyT& p, const Rational& t)
{
	SymPoly out(p.generator_count());
	for (const auto& [m, c] : p.terms())
		out.add_term(m, c.evaluate(t));
	return out;
}

int t_degree(const SymPolyT& p)
{
	int d = -1;
	for (const auto& [m, c] : p.terms())
		d = std::max(d, c.degree());
	return d;
}

std::string to_string(const Monomial& m, const NameList& names)
{
	std::string out;
	for (int i = 0; i < static_cast<int>(names.size()); ++i) {
		int e = m[i];
		if (e == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += names[static_cast<std::size_t>(i)];
		if (e > 1)
			out += "^" + std::to_string(e);
	}
	return out.empty() ? "1" : out;
}

std::string to_string(const SymPoly& p, const NameList& names)
{
	if (p.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
		const auto& [m, c] = *it;
		Rational mag = c.sign() < 0 ? -c : c;
		if (first)
			out += c.sign() < 0 ? "-" : "";
		else
			out += c.sign() < 0 ? " - " : " + ";
		first = false;
		if (m.degree() == 0)
			out += mag.to_string();
		else if (mag.is_one())
			out += to_string(m, names);
		else
			out += mag.to_string() + "*" + to_string(m, names);
	}
	return out;
}

std::string to_string(const SymPolyT& p, const NameList& names)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (int k = 0; k <= t_degree(p); ++k) {
		SymPoly c = t_coefficient(p, static_cast<unsigned>(k));
		if (c.is_zero())
			continue;
		if (!out.empty())
			out += " + ";
		if (k == 0)
			out += to_string(c, names);
		else
			out += (k == 1 ? std::string("t") : "t^" + std::to_string(k)) + "*(" + to_string(c, names) + ")";
	}
	return out;
}

} // namespace famalg
