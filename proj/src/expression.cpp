#include "famalg/expression.hpp"

#include <cctype>
#include <vector>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

class Parser {
public:
	Parser(std::string_view text, const NameList& names) : text_(text), names_(names) {}

	Expression input()
	{
		skip();
		Expression out;
		if (peek() == '[')
			out = matrix();
		else
			out = expr();
		skip();
		if (pos_ != text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return out;
	}

	SymPoly polynomial()
	{
		skip();
		SymPoly out = expr();
		skip();
		if (pos_ != text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return out;
	}

private:
	[[noreturn]] void fail(const std::string& what) const
	{
		throw ParseError(what, 1, static_cast<int>(pos_) + 1);
	}

	void skip()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	char peek()
	{
		skip();
		return pos_ < text_.size() ? text_[pos_] : '\0';
	}

	void expect(char c)
	{
		if (peek() != c)
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	int n() const { return static_cast<int>(names_.size()); }

	MatPoly matrix()
	{
		expect('[');
		std::vector<std::vector<SymPoly>> rows;
		do {
			expect('[');
			std::vector<SymPoly> row;
			row.push_back(expr());
			while (peek() == ',') {
				++pos_;
				row.push_back(expr());
			}
			expect(']');
			if (!rows.empty() && row.size() != rows.front().size())
				fail("matrix rows differ in length");
			rows.push_back(std::move(row));
		} while (peek() == ',' && (++pos_, true));
		expect(']');
		if (rows.size() != rows.front().size())
			fail("matrix is not square");
		MatPoly out(static_cast<int>(rows.size()), SymPoly(n()));
		for (std::size_t p = 0; p < rows.size(); ++p)
			for (std::size_t q = 0; q < rows.size(); ++q)
				out(static_cast<int>(p), static_cast<int>(q)) = std::move(rows[p][q]);
		return out;
	}

	SymPoly expr()
	{
		SymPoly out(n());
		bool negate = false;
		if (peek() == '+' || peek() == '-') {
			negate = text_[pos_] == '-';
			++pos_;
		}
		out = term();
		if (negate)
			out = -out;
		for (char c = peek(); c == '+' || c == '-'; c = peek()) {
			++pos_;
			if (c == '+')
				out += term();
			else
				out -= term();
		}
		return out;
	}

	SymPoly term()
	{
		SymPoly out = power();
		for (char c = peek(); c == '*' || c == '/'; c = peek()) {
			const std::size_t at = pos_++;
			SymPoly rhs = power();
			if (c == '*') {
				out = out * rhs;
				continue;
			}
			if (rhs.degree() > 0) {
				pos_ = at;
				fail("division by a non-constant");
			}
			Rational r = rhs.coefficient(Monomial());
			if (r.is_zero()) {
				pos_ = at;
				fail("division by zero");
			}
			out *= r.inverse();
		}
		return out;
	}

	SymPoly power()
	{
		SymPoly base = atom();
		if (peek() != '^')
			return base;
		++pos_;
		skip();
		const std::size_t start = pos_;
		unsigned long e = 0;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
			e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
			if (e > 255)
				fail("exponent too large");
			++pos_;
		}
		if (pos_ == start)
			fail("expected an exponent");
		return base.pow(static_cast<unsigned>(e));
	}

	SymPoly atom()
	{
		const char c = peek();
		if (c == '(') {
			++pos_;
			SymPoly inner = expr();
			expect(')');
			return inner;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			const std::size_t start = pos_;
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
				++pos_;
			return SymPoly::constant(n(), Rational::parse(text_.substr(start, pos_ - start)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			const std::size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
				++pos_;
			const std::string name(text_.substr(start, pos_ - start));
			for (int i = 0; i < n(); ++i)
				if (names_[static_cast<std::size_t>(i)] == name)
					return SymPoly::generator(n(), i);
			pos_ = start;
			fail("unknown generator '" + name + "'");
		}
		if (c == '\0')
			fail("unexpected end of input");
		fail("unexpected '" + std::string(1, c) + "'");
	}

	std::string_view text_;
	const NameList& names_;
	std::size_t pos_ = 0;
};

} // namespace

SymPoly parse_polynomial(std::string_view text, const NameList& names) { return Parser(text, names).polynomial(); }

Expression parse_expression(std::string_view text, const NameList& names) { return Parser(text, names).input(); }

MatPoly parse_matrix(std::string_view text, const NameList& names, int d)
{
	Expression e = parse_expression(text, names);
	if (auto* a = std::get_if<SymPoly>(&e))
		return scalar_matrix(d, *a);
	MatPoly m = std::get<MatPoly>(std::move(e));
	if (m.dim() != d)
		throw DimensionError("expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix, got " +
		                     std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
	return m;
}

} // namespace famalg
