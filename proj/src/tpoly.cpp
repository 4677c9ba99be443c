#include "famalg/tpoly.hpp"

#include <algorithm>

namespace famalg {

TPoly::TPoly(const Rational& c)
{
	if (!c.is_zero())
		coeffs_.push_back(c);
}

TPoly TPoly::monomial(const Rational& c, unsigned k)
{
	TPoly p;
	if (!c.is_zero()) {
		p.coeffs_.assign(k + 1, Rational(0));
		p.coeffs_[k] = c;
	}
	return p;
}

Rational TPoly::coefficient(unsigned k) const
{
	return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational TPoly::evaluate(const Rational& t) const
{
	Rational acc(0);
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		acc = acc * t + *it;
	return acc;
}

void TPoly::trim()
{
	while (!coeffs_.empty() && coeffs_.back().is_zero())
		coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o)
{
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	trim();
	return *this;
}

TPoly& TPoly::operator-=(const TPoly& o)
{
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] -= o.coeffs_[i];
	trim();
	return *this;
}

TPoly& TPoly::operator*=(const TPoly& o)
{
	if (is_zero() || o.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
	for (std::size_t i = 0; i < coeffs_.size(); ++i) {
		if (coeffs_[i].is_zero())
			continue;
		for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
			out[i + j] += coeffs_[i] * o.coeffs_[j];
	}
	coeffs_ = std::move(out);
	trim();
	return *this;
}

TPoly& TPoly::operator*=(const Rational& c)
{
	if (c.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto& x : coeffs_)
		x *= c;
	return *this;
}

std::string TPoly::to_string() const
{
	if (is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (int k = degree(); k >= 0; --k) {
		const Rational& c = coeffs_[static_cast<std::size_t>(k)];
		if (c.is_zero())
			continue;
		Rational mag = c.sign() < 0 ? -c : c;
		if (first)
			out += c.sign() < 0 ? "-" : "";
		else
			out += c.sign() < 0 ? " - " : " + ";
		first = false;
		if (k == 0) {
			out += mag.to_string();
			continue;
		}
		if (!mag.is_one())
			out += mag.to_string() + "*";
		out += "t";
		if (k > 1)
			out += "^" + std::to_string(k);
	}
	return out;
}

} // namespace famalg
