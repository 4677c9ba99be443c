#include "famalg/cochain.hpp"

#include <optional>
#include <vector>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

Rational sign(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void check_same_arity(const Cochain& f, const Cochain& g)
{
	if (f.arity() != g.arity())
		throw DimensionError("cannot combine cochains of arity " + std::to_string(f.arity()) + " and " +
		                     std::to_string(g.arity()));
}

} // namespace

Cochain::Cochain(int arity, std::string label, Fn fn) : arity_(arity), label_(std::move(label)), fn_(std::move(fn))
{
	if (arity < 0)
		throw DimensionError("cochain arity must be nonnegative");
}

MatPoly Cochain::operator()(Args args) const
{
	if (static_cast<int>(args.size()) != arity_)
		throw DimensionError(label_ + " takes " + std::to_string(arity_) + " arguments, got " +
		                     std::to_string(args.size()));
	return fn_(args);
}

MatPoly Cochain::operator()(std::initializer_list<MatPoly> args) const
{
	return (*this)(Args(args.begin(), args.size()));
}

Cochain d_hochschild(const Cochain& f, const Cochain& mu)
{
	if (mu.arity() != 2)
		throw DimensionError("multiplication must be a 2-cochain");
	const int n = f.arity();
	return Cochain(n + 1, "dH(" + f.label() + ")", [f, mu, n](Cochain::Args a) {
		MatPoly out = mu({a[0], f(a.subspan(1))});
		std::vector<MatPoly> inner;
		for (int k = 1; k <= n; ++k) {
			inner.assign(a.begin(), a.end());
			inner[static_cast<std::size_t>(k - 1)] = mu({a[static_cast<std::size_t>(k - 1)], a[static_cast<std::size_t>(k)]});
			inner.erase(inner.begin() + k);
			out += sign(k) * f(inner);
		}
		out += sign(n + 1) * mu({f(a.first(static_cast<std::size_t>(n))), a[static_cast<std::size_t>(n)]});
		return out;
	});
}

Cochain circ(const Cochain& f1, const Cochain& f2)
{
	const int k = f1.arity();
	const int l = f2.arity();
	if (k < 1)
		throw DimensionError("cannot insert into a 0-cochain");
	return Cochain(k + l - 1, "(" + f1.label() + " o " + f2.label() + ")", [f1, f2, k, l](Cochain::Args a) {
		std::optional<MatPoly> out;
		std::vector<MatPoly> outer;
		for (int i = 0; i < k; ++i) {
			outer.assign(a.begin(), a.begin() + i);
			outer.push_back(f2(a.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(l))));
			outer.insert(outer.end(), a.begin() + i + l, a.end());
			MatPoly term = sign((k - i - 1) * (l - 1)) * f1(outer);
			if (out)
				*out += term;
			else
				out = std::move(term);
		}
		return *out;
	});
}

Cochain gerstenhaber_bracket(const Cochain& f1, const Cochain& f2)
{
	const int k = f1.arity();
	const int l = f2.arity();
	if (k < 1 || l < 1)
		throw DimensionError("Gerstenhaber bracket needs arities >= 1");
	Cochain forward = circ(f1, f2);
	Cochain backward = circ(f2, f1);
	Rational s = sign((k - 1) * (l - 1));
	return Cochain(k + l - 1, "[" + f1.label() + ", " + f2.label() + "]_G",
	               [forward, backward, s](Cochain::Args a) { return forward(a) - s * backward(a); });
}

Cochain operator+(const Cochain& f, const Cochain& g)
{
	check_same_arity(f, g);
	return Cochain(f.arity(), f.label() + " + " + g.label(), [f, g](Cochain::Args a) { return f(a) + g(a); });
}

Cochain operator-(const Cochain& f, const Cochain& g)
{
	check_same_arity(f, g);
	return Cochain(f.arity(), f.label() + " - " + g.label(), [f, g](Cochain::Args a) { return f(a) - g(a); });
}

Cochain operator*(const Rational& s, const Cochain& f)
{
	return Cochain(f.arity(), s.to_string() + "*" + f.label(), [s, f](Cochain::Args a) { return s * f(a); });
}

namespace atoms {

Cochain identity(const Family&)
{
	return Cochain(1, "id", [](Cochain::Args a) { return a[0]; });
}

Cochain mu(const Family&)
{
	return Cochain(2, "mu", [](Cochain::Args a) { return mat_mul(a[0], a[1]); });
}

Cochain poisson(const Family& F)
{
	return Cochain(2, "P", [&F](Cochain::Args a) { return F.nc_poisson(a[0], a[1]); });
}

Cochain phi(const Family& F)
{
	return Cochain(2, "Phi", [&F](Cochain::Args a) { return F.phi(a[0], a[1]); });
}

Cochain nabla(const Family& F)
{
	return Cochain(1, "nabla", [&F](Cochain::Args a) { return F.nabla(a[0]); });
}

Cochain nabla_prime(const Family& F)
{
	return Cochain(1, "nabla'", [&F](Cochain::Args a) { return F.nabla_prime(a[0]); });
}

Cochain c1(const Family& F)
{
	return Cochain(1, "c1", [&F](Cochain::Args a) { return F.chern_c1(a[0]); });
}

Cochain star(const Family& F, unsigned k)
{
	return Cochain(2, "m" + std::to_string(k), [&F, k](Cochain::Args a) { return F.star_coefficient(a[0], a[1], k); });
}

} // namespace atoms

} // namespace famalg
