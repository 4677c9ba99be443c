#include <gtest/gtest.h>

#include "famalg/enveloping.hpp"
#include "famalg/poisson.hpp"
#include "oracles.hpp"

using namespace famalg;

namespace {

SymPolyT T(const SymPoly& a) { return lift_to_t(a); }

SymPolyT tpoly(const LieAlgebra& L, std::string_view plain, std::string_view times_t)
{
	SymPolyT out = T(fixtures::poly(L, plain));
	out += T(fixtures::poly(L, times_t)).scaled(TPoly::t());
	return out;
}

} // namespace

TEST(Poisson, Examples)
{
	LieAlgebra L = presets::sl2();
	EXPECT_EQ(poisson_bracket(L, fixtures::poly(L, "e"), fixtures::poly(L, "f")), fixtures::poly(L, "h"));
	EXPECT_EQ(poisson_bracket(L, fixtures::poly(L, "h"), fixtures::poly(L, "e^2")), fixtures::poly(L, "4*e^2"));
	EXPECT_TRUE(poisson_bracket(L, L.one(), fixtures::poly(L, "e*f")).is_zero());
}

TEST(Poisson, JacobiAndLeibniz)
{
	for (const LieAlgebra& L : {presets::sl2(), presets::heisenberg3(), presets::affine2()}) {
		auto ps = oracle::random_polys(L.dimension(), 6, 2, 4);
		auto pb = [&](const SymPoly& a, const SymPoly& b) { return poisson_bracket(L, a, b); };
		for (const auto& a : ps)
			for (const auto& b : ps) {
				EXPECT_EQ(pb(a, b), -pb(b, a));
				for (const auto& c : ps) {
					EXPECT_TRUE((pb(a, pb(b, c)) + pb(b, pb(c, a)) + pb(c, pb(a, b))).is_zero());
					EXPECT_EQ(pb(a, b * c), pb(a, b) * c + b * pb(a, c));
				}
			}
	}
}

TEST(Enveloping, Sl2Oracles)
{
	LieAlgebra L = presets::sl2();
	Enveloping U(L);
	UEElement e = U.generator(0), f = U.generator(1), h = U.generator(2);
	EXPECT_EQ(U.multiply(f, e).terms(), tpoly(L, "e*f", "-h"));
	EXPECT_EQ(U.commutator(h, e).terms(), tpoly(L, "0", "2*e"));
	SymPoly ef = fixtures::poly(L, "e*f");
	EXPECT_EQ(U.pbw_symmetrize(ef).terms(), tpoly(L, "e*f", "-1/2*h"));
	EXPECT_EQ(U.pbw_inverse(UEElement(T(ef))), tpoly(L, "e*f", "1/2*h"));
	EXPECT_EQ(U.star_product(fixtures::poly(L, "e"), fixtures::poly(L, "f")), tpoly(L, "e*f", "1/2*h"));
	EXPECT_EQ(U.star_coefficient(fixtures::poly(L, "e^2"), fixtures::poly(L, "f"), 2),
	          fixtures::poly(L, "-1/3*e"));
	EXPECT_EQ(to_string(U.pbw_symmetrize(ef), L.names()), "e*f - 1/2*t*h");
}

TEST(Enveloping, HeisenbergStar)
{
	LieAlgebra L = presets::heisenberg3();
	Enveloping U(L);
	EXPECT_EQ(U.star_product(fixtures::poly(L, "p"), fixtures::poly(L, "q")), tpoly(L, "p*q", "1/2*z"));
}

TEST(Enveloping, AgreesWithWordOracle)
{
	for (const LieAlgebra& L : {presets::sl2(), presets::affine2()}) {
		Enveloping U(L);
		const int n = L.dimension();
		auto monos = monomials_up_to(n, 3);
		for (const auto& a : monos) {
			SymPolyT ta = SymPolyT::term(n, a, TPoly(1));
			EXPECT_EQ(U.pbw_symmetrize(ta).terms(), oracle::symmetrize(L, ta)) << L.label();
			for (const auto& b : monomials_up_to(n, 2)) {
				SymPolyT tb = SymPolyT::term(n, b, TPoly(1));
				// I(a *_t b) must equal I(a) I(b), both sides from the word oracle.
				SymPolyT star = U.star_product(ta, tb);
				EXPECT_EQ(oracle::symmetrize(L, star), oracle::product_of_symmetrized(L, ta, tb)) << L.label();
			}
		}
	}
}

TEST(Enveloping, Associativity)
{
	LieAlgebra L = presets::sl2();
	Enveloping U(L);
	auto monos = monomials_up_to(3, 2);
	for (const auto& a : monos)
		for (const auto& b : monos)
			for (const auto& c : monos) {
				UEElement x = U.ordered(a), y = U.ordered(b), z = U.ordered(c);
				EXPECT_EQ(U.multiply(U.multiply(x, y), z), U.multiply(x, U.multiply(y, z)));
			}
	auto ps = oracle::random_polys(3, 4, 2, 13);
	for (const auto& a : ps)
		for (const auto& b : ps)
			for (const auto& c : ps)
				EXPECT_EQ(U.star_product(U.star_product(T(a), T(b)), T(c)),
				          U.star_product(T(a), U.star_product(T(b), T(c))));
}

TEST(Enveloping, RoundTrips)
{
	for (const LieAlgebra& L : {presets::sl2(), presets::heisenberg3(), presets::affine2()}) {
		Enveloping U(L);
		for (const auto& m : monomials_up_to(L.dimension(), 4)) {
			SymPoly a = SymPoly::term(L.dimension(), m, Rational(1));
			EXPECT_EQ(U.pbw_inverse(U.pbw_symmetrize(a)), T(a));
			UEElement u = U.ordered(m);
			EXPECT_EQ(U.pbw_symmetrize(U.pbw_inverse(u)), u);
			EXPECT_EQ(U.pbw_symmetrize(a).specialize(Rational(0)), a);
		}
	}
}

TEST(Enveloping, DeformationTerms)
{
	for (const LieAlgebra& L : {presets::sl2(), presets::heisenberg3()}) {
		Enveloping U(L);
		const int n = L.dimension();
		auto monos = monomials_up_to(n, 3);
		for (const auto& ma : monos)
			for (const auto& mb : monos) {
				SymPoly a = SymPoly::term(n, ma, Rational(1));
				SymPoly b = SymPoly::term(n, mb, Rational(1));
				EXPECT_EQ(U.star_coefficient(a, b, 0), a * b);
				EXPECT_EQ(U.star_coefficient(a, b, 1), Rational(1, 2) * poisson_bracket(L, a, b));
				SymPoly m2 = m2_closed_form(L, a, b);
				EXPECT_EQ(U.star_coefficient(a, b, 2), m2);
				EXPECT_EQ(phi_closed_form(L, a, b), Rational(4) * m2);
			}
	}
}

TEST(Enveloping, ExpansionTerminates)
{
	LieAlgebra L = presets::sl2();
	Enveloping U(L);
	auto terms = U.star_expansion(fixtures::poly(L, "e^2*h"), fixtures::poly(L, "f^2"));
	ASSERT_FALSE(terms.empty());
	// m_k lowers the degree by k, so at most 3 + 2 terms survive.
	EXPECT_LE(terms.size(), 5u);
	EXPECT_FALSE(terms.back().is_zero());
	for (std::size_t k = 0; k < terms.size(); ++k)
		EXPECT_LE(terms[k].degree(), 5 - static_cast<int>(k));
}

TEST(Enveloping, PhiOracle)
{
	LieAlgebra L = presets::sl2();
	EXPECT_EQ(phi_closed_form(L, fixtures::poly(L, "e^2"), fixtures::poly(L, "f")), fixtures::poly(L, "-4/3*e"));
}

TEST(Enveloping, InvariantsAreCentral)
{
	for (const LieAlgebra& L : {presets::sl2(), presets::heisenberg3(), presets::affine2()}) {
		Enveloping U(L);
		for (const auto& a : invariant_polynomials(L, 4)) {
			ASSERT_TRUE(sym_ad_invariant(L, a));
			UEElement Ia = U.pbw_symmetrize(a);
			for (int i = 0; i < L.dimension(); ++i)
				EXPECT_TRUE(U.commutator(Ia, U.generator(i)).is_zero()) << L.label();
		}
	}
}

TEST(Enveloping, InvariantPolynomialDimensions)
{
	auto count = [](const std::vector<SymPoly>& v, int deg) {
		return std::count_if(v.begin(), v.end(), [&](const SymPoly& p) { return p.degree() == deg; });
	};
	auto sl2 = invariant_polynomials(presets::sl2(), 4);
	EXPECT_EQ(count(sl2, 0), 1);
	EXPECT_EQ(count(sl2, 1), 0);
	EXPECT_EQ(count(sl2, 2), 1);
	EXPECT_EQ(count(sl2, 4), 1);
	auto heis = invariant_polynomials(presets::heisenberg3(), 2);
	EXPECT_EQ(count(heis, 1), 1);
	EXPECT_EQ(count(heis, 2), 1);
}

TEST(Enveloping, AbelianIsCommutative)
{
	LieAlgebra L = presets::abelian(3);
	Enveloping U(L);
	auto ps = oracle::random_polys(3, 6, 3, 2);
	for (const auto& a : ps)
		for (const auto& b : ps)
			EXPECT_EQ(U.star_product(a, b), T(a * b));
}
