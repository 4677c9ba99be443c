#include "famalg/poisson.hpp"

#include <map>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

void check_ring(const LieAlgebra& L, const SymPoly& a)
{
	if (a.generator_count() != L.dimension())
		throw DimensionError("polynomial has " + std::to_string(a.generator_count()) +
		                     " generators, algebra has " + std::to_string(L.dimension()));
}

std::vector<SymPoly> gradient(const SymPoly& a)
{
	std::vector<SymPoly> g;
	g.reserve(static_cast<std::size_t>(a.generator_count()));
	for (int i = 0; i < a.generator_count(); ++i)
		g.push_back(a.partial(i));
	return g;
}

/// Shared shape of m2 and phi; they differ only in the two weights.
SymPoly second_order_form(const LieAlgebra& L, const SymPoly& a, const SymPoly& b, const Rational& w1,
                          const Rational& w2)
{
	check_ring(L, a);
	check_ring(L, b);
	const int n = L.dimension();
	SymPoly out(n);
	if (a.degree() < 1 || b.degree() < 1)
		return out;

	auto da = gradient(a);
	auto db = gradient(b);
	std::vector<SymPoly> dda(static_cast<std::size_t>(n * n));
	std::vector<SymPoly> ddb(static_cast<std::size_t>(n * n));
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			dda[static_cast<std::size_t>(i * n + k)] = da[static_cast<std::size_t>(i)].partial(k);
			ddb[static_cast<std::size_t>(i * n + k)] = db[static_cast<std::size_t>(i)].partial(k);
		}
	auto at = [n](const std::vector<SymPoly>& v, int i, int k) -> const SymPoly& {
		return v[static_cast<std::size_t>(i * n + k)];
	};

	// w1 * sum_{ijkl} L_ij L_kl d^i d^k a d^j d^l b, L_ij = c^s_ij X_s
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			const SymPoly& aik = at(dda, i, k);
			if (aik.is_zero())
				continue;
			for (int j = 0; j < n; ++j) {
				const SymPoly& lij = L.bracket_form(i, j);
				if (lij.is_zero())
					continue;
				for (int l = 0; l < n; ++l) {
					const SymPoly& bjl = at(ddb, j, l);
					const SymPoly& lkl = L.bracket_form(k, l);
					if (bjl.is_zero() || lkl.is_zero())
						continue;
					out += w1 * (lij * lkl * aik * bjl);
				}
			}
		}

	// w2 * sum_{kji} R_kji (d^k d^j a d^i b + d^i a d^k d^j b), R_kji = c^t_ks c^s_ji X_t
	for (int k = 0; k < n; ++k)
		for (int j = 0; j < n; ++j) {
			const SymPoly& akj = at(dda, k, j);
			const SymPoly& bkj = at(ddb, k, j);
			if (akj.is_zero() && bkj.is_zero())
				continue;
			for (int i = 0; i < n; ++i) {
				SymPoly r(n);
				for (int s = 0; s < n; ++s)
					if (!L.c(j, i, s).is_zero())
						r += L.c(j, i, s) * L.bracket_form(k, s);
				if (r.is_zero())
					continue;
				SymPoly inner = akj * db[static_cast<std::size_t>(i)] + da[static_cast<std::size_t>(i)] * bkj;
				if (!inner.is_zero())
					out += w2 * (r * inner);
			}
		}
	return out;
}

} // namespace

SymPoly poisson_bracket(const LieAlgebra& L, const SymPoly& a, const SymPoly& b)
{
	check_ring(L, a);
	check_ring(L, b);
	const int n = L.dimension();
	SymPoly out(n);
	if (a.degree() < 1 || b.degree() < 1)
		return out;
	auto db = gradient(b);
	for (int i = 0; i < n; ++i) {
		SymPoly ai = a.partial(i);
		if (ai.is_zero())
			continue;
		SymPoly acc(n);
		for (int j = 0; j < n; ++j) {
			const SymPoly& bj = db[static_cast<std::size_t>(j)];
			if (bj.is_zero() || L.bracket_form(i, j).is_zero())
				continue;
			acc += L.bracket_form(i, j) * bj;
		}
		if (!acc.is_zero())
			out += ai * acc;
	}
	return out;
}

bool sym_ad_invariant(const LieAlgebra& L, const SymPoly& a)
{
	for (int j = 0; j < L.dimension(); ++j)
		if (!poisson_bracket(L, L.generator(j), a).is_zero())
			return false;
	return true;
}

SymPoly m2_closed_form(const LieAlgebra& L, const SymPoly& a, const SymPoly& b)
{
	return second_order_form(L, a, b, Rational(1, 8), Rational(1, 12));
}

SymPoly phi_closed_form(const LieAlgebra& L, const SymPoly& a, const SymPoly& b)
{
	return second_order_form(L, a, b, Rational(1, 2), Rational(1, 3));
}

std::vector<SymPoly> invariant_polynomials(const LieAlgebra& L, int max_degree)
{
	const int n = L.dimension();
	std::vector<SymPoly> out;
	for (int deg = 0; deg <= max_degree; ++deg) {
		auto monos = monomials_of_degree(n, deg);
		const int m = static_cast<int>(monos.size());
		std::map<Monomial, int> position;
		for (int c = 0; c < m; ++c)
			position.emplace(monos[static_cast<std::size_t>(c)], c);
		QMatrix system(n * m, m);
		for (int c = 0; c < m; ++c) {
			SymPoly mono = SymPoly::term(n, monos[static_cast<std::size_t>(c)], Rational(1));
			for (int x = 0; x < n; ++x) {
				SymPoly image = poisson_bracket(L, L.generator(x), mono);
				for (const auto& [mm, coeff] : image.terms())
					system(x * m + position.at(mm), c) = coeff;
			}
		}
		for (const auto& v : nullspace(system)) {
			SymPoly p(n);
			for (int c = 0; c < m; ++c)
				p.add_term(monos[static_cast<std::size_t>(c)], v(c, 0));
			out.push_back(std::move(p));
		}
	}
	return out;
}

} // namespace famalg
