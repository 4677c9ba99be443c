#include "famalg/family.hpp"

#include <map>

#include "famalg/errors.hpp"
#include "famalg/poisson.hpp"

namespace famalg {

Family::Family(LieAlgebra L, Representation R) : L_(std::move(L)), R_(std::move(R))
{
	if (auto bad = validate_lie(L_); !bad.empty())
		throw ValidationError(describe(bad.front(), L_.names()));
	if (auto bad = validate_rep(L_, R_); !bad.empty())
		throw ValidationError(describe(bad.front(), L_.names()));
	U_ = std::make_unique<Enveloping>(L_);
}

void Family::check(const MatPoly& a) const
{
	if (a.dim() != d())
		throw DimensionError("matrix is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
		                     ", representation has dimension " + std::to_string(d()));
	if (generator_count(a) != n())
		throw DimensionError("matrix entries have " + std::to_string(generator_count(a)) +
		                     " generators, algebra has " + std::to_string(n()));
}

MatPoly Family::zero() const { return MatPoly(d(), L_.zero()); }

MatPoly Family::identity() const { return scalar(L_.one()); }

MatPoly Family::scalar(const SymPoly& a) const { return scalar_matrix(d(), a); }

MatPoly Family::unit(int p, int q, const Monomial& m) const
{
	MatPoly out = zero();
	out(p, q) = SymPoly::term(n(), m, Rational(1));
	return out;
}

MatPoly Family::classical_action(int i, const MatPoly& a) const
{
	check(a);
	MatPoly out = tau(i) * a - a * tau(i);
	const SymPoly x = L_.generator(i);
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q)
			if (!a(p, q).is_zero())
				out(p, q) += poisson_bracket(L_, x, a(p, q));
	return out;
}

bool Family::is_classical_invariant(const MatPoly& a) const
{
	for (int i = 0; i < n(); ++i)
		if (!classical_action(i, a).is_zero())
			return false;
	return true;
}

MatUE Family::quantum_action(int i, const MatUE& u) const
{
	if (u.dim() != d())
		throw DimensionError("matrix dimension does not match the representation");
	// In U_t, Xu - uX is t times the derivation extending ad X, so the matrix
	// part carries a factor t to match; at t = 1 this is the plain criterion.
	MatUE out = tau(i) * u - u * tau(i);
	const UEElement x = U_->generator(i);
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q) {
			out(p, q) = UEElement(out(p, q).terms().scaled(TPoly::t()));
			if (!u(p, q).is_zero())
				out(p, q) += U_->commutator(x, u(p, q));
		}
	return out;
}

bool Family::is_quantum_invariant(const MatUE& u) const
{
	for (int i = 0; i < n(); ++i)
		if (!quantum_action(i, u).is_zero())
			return false;
	return true;
}

std::vector<MatPoly> Family::invariant_basis(int D) const
{
	if (D < 0)
		throw DimensionError("degree bound must be nonnegative");
	const int dd = d() * d();
	std::vector<MatPoly> out;
	for (int deg = 0; deg <= D; ++deg) {
		const auto monos = monomials_of_degree(n(), deg);
		const int m = static_cast<int>(monos.size());
		std::map<Monomial, int> position;
		for (int c = 0; c < m; ++c)
			position.emplace(monos[static_cast<std::size_t>(c)], c);
		const int unknowns = dd * m;

		// Columns: E_pq (x) monomial c at (p*d + q)*m + c. Rows: the same
		// coordinates once per generator, all L_X stacked.
		QMatrix system(n() * unknowns, unknowns);
		for (int p = 0; p < d(); ++p)
			for (int q = 0; q < d(); ++q)
				for (int c = 0; c < m; ++c) {
					const int col = (p * d() + q) * m + c;
					const MatPoly u = unit(p, q, monos[static_cast<std::size_t>(c)]);
					for (int x = 0; x < n(); ++x) {
						const MatPoly image = classical_action(x, u);
						for (int r = 0; r < d(); ++r)
							for (int s = 0; s < d(); ++s)
								for (const auto& [mono, coeff] : image(r, s).terms())
									system(x * unknowns + (r * d() + s) * m + position.at(mono), col) = coeff;
					}
				}

		for (const auto& v : nullspace(system)) {
			MatPoly a = zero();
			for (int p = 0; p < d(); ++p)
				for (int q = 0; q < d(); ++q)
					for (int c = 0; c < m; ++c)
						a(p, q).add_term(monos[static_cast<std::size_t>(c)], v((p * d() + q) * m + c, 0));
			out.push_back(std::move(a));
		}
	}
	return out;
}

template <class F>
MatPoly Family::lift_bilinear(const MatPoly& a, const MatPoly& b, F&& f) const
{
	check(a);
	check(b);
	MatPoly out = zero();
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q) {
			if (a(p, q).is_zero())
				continue;
			for (int r = 0; r < d(); ++r)
				if (!b(q, r).is_zero())
					out(p, r) += f(a(p, q), b(q, r));
		}
	return out;
}

MatPoly Family::nc_poisson(const MatPoly& a, const MatPoly& b) const
{
	return lift_bilinear(a, b, [&](const SymPoly& x, const SymPoly& y) { return poisson_bracket(L_, x, y); });
}

MatPoly Family::phi(const MatPoly& a, const MatPoly& b) const
{
	return lift_bilinear(a, b, [&](const SymPoly& x, const SymPoly& y) { return phi_closed_form(L_, x, y); });
}

MatPoly Family::nabla(const MatPoly& a) const
{
	check(a);
	MatPoly out = zero();
	for (int k = 0; k < n(); ++k) {
		MatPoly dk = zero();
		for (int p = 0; p < d(); ++p)
			for (int q = 0; q < d(); ++q)
				dk(p, q) = a(p, q).partial(k);
		if (!dk.is_zero())
			out += dk * tau(k);
	}
	return out;
}

MatPoly Family::nabla_prime(const MatPoly& a) const
{
	check(a);
	MatPoly out = zero();
	for (int k = 0; k < n(); ++k) {
		MatPoly dk = zero();
		for (int p = 0; p < d(); ++p)
			for (int q = 0; q < d(); ++q)
				dk(p, q) = a(p, q).partial(k);
		if (!dk.is_zero())
			out += tau(k) * dk;
	}
	return out;
}

MatPoly Family::chern_c1(const MatPoly& a) const
{
	check(a);
	MatPoly out = zero();
	for (int i = 0; i < n(); ++i) {
		const Rational tr = L_.ad_trace(i);
		if (tr.is_zero())
			continue;
		for (int p = 0; p < d(); ++p)
			for (int q = 0; q < d(); ++q)
				out(p, q) += tr * a(p, q).partial(i);
	}
	return out;
}

MatUE Family::fpbw(const MatPoly& a) const
{
	check(a);
	MatUE out(d(), U_->zero());
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q)
			out(p, q) = U_->pbw_symmetrize(a(p, q));
	return out;
}

MatUE Family::fpbw(const MatPolyT& a) const
{
	if (a.dim() != d())
		throw DimensionError("matrix dimension does not match the representation");
	MatUE out(d(), U_->zero());
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q)
			out(p, q) = U_->pbw_symmetrize(a(p, q));
	return out;
}

MatPolyT Family::fpbw_inverse(const MatUE& u) const
{
	if (u.dim() != d())
		throw DimensionError("matrix dimension does not match the representation");
	MatPolyT out(d(), SymPolyT(n()));
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q)
			out(p, q) = U_->pbw_inverse(u(p, q));
	return out;
}

MatUE Family::mat_mul(const MatUE& a, const MatUE& b) const { return famalg::mat_mul(*U_, a, b); }

MatPolyT Family::star_product(const MatPoly& a, const MatPoly& b) const
{
	check(a);
	check(b);
	MatPolyT out(d(), SymPolyT(n()));
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q) {
			if (a(p, q).is_zero())
				continue;
			for (int r = 0; r < d(); ++r)
				if (!b(q, r).is_zero())
					out(p, r) += U_->star_product(a(p, q), b(q, r));
		}
	return out;
}

MatPoly Family::star_coefficient(const MatPoly& a, const MatPoly& b, unsigned k) const
{
	return lift_bilinear(a, b,
	                     [&](const SymPoly& x, const SymPoly& y) { return U_->star_coefficient(x, y, k); });
}

std::vector<MatPoly> Family::spanning_set(int D) const
{
	std::vector<MatPoly> out;
	const auto monos = monomials_up_to(n(), D);
	for (int p = 0; p < d(); ++p)
		for (int q = 0; q < d(); ++q)
			for (const auto& m : monos)
				out.push_back(unit(p, q, m));
	return out;
}

MatPoly transport(const MatPoly& a, const BasisChange& change)
{
	MatPoly out(a.dim(), SymPoly(generator_count(a)));
	for (int p = 0; p < a.dim(); ++p)
		for (int q = 0; q < a.dim(); ++q)
			out(p, q) = transport(a(p, q), change);
	return out;
}

Family change_basis(const Family& F, const BasisChange& change)
{
	return Family(change_basis(F.algebra(), change), transport(F.representation(), change));
}

} // namespace famalg
