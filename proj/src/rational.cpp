#include "famalg/rational.hpp"

#include <cctype>
#include <ostream>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (s.empty())
		return false;
	std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

mpz_class parse_integer(std::string_view s)
{
	if (!s.empty() && s[0] == '+')
		s.remove_prefix(1);
	return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw DivisionByZeroError("rational with zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	auto s = trim(text);
	auto slash = s.find('/');
	if (slash == std::string_view::npos) {
		if (!is_integer_literal(s))
			throw ValidationError("malformed rational '" + std::string(text) + "'");
		return Rational(mpq_class(parse_integer(s)));
	}
	auto num = trim(s.substr(0, slash));
	auto den = trim(s.substr(slash + 1));
	if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
		throw ValidationError("malformed rational '" + std::string(text) + "'");
	mpz_class d = parse_integer(den);
	if (d == 0)
		throw ValidationError("zero denominator in '" + std::string(text) + "'");
	return Rational(mpq_class(parse_integer(num), d));
}

Rational& Rational::operator/=(const Rational& o)
{
	if (o.is_zero())
		throw DivisionByZeroError("division by zero rational");
	value_ /= o.value_;
	return *this;
}

Rational Rational::inverse() const
{
	if (is_zero())
		throw DivisionByZeroError("inverse of zero rational");
	return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned e) const
{
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
	return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace famalg

std::size_t std::hash<famalg::Rational>::operator()(const famalg::Rational& r) const noexcept
{
	return std::hash<std::string>{}(r.to_string());
}
