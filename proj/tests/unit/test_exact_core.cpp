#include <gtest/gtest.h>

#include <random>

#include "famalg/errors.hpp"
#include "famalg/qmatrix.hpp"
#include "famalg/rational.hpp"
#include "famalg/tpoly.hpp"
#include "oracles.hpp"

using namespace famalg;

TEST(Rational, LowestTermsAndSign)
{
	Rational r(6, -4);
	EXPECT_EQ(r.to_string(), "-3/2");
	EXPECT_EQ(r.denominator(), 2);
	EXPECT_EQ(Rational(4, 2).to_string(), "2");
	EXPECT_TRUE(Rational(0, 5).is_zero());
}

TEST(Rational, Parse)
{
	EXPECT_EQ(Rational::parse(" -7/21 "), Rational(-1, 3));
	EXPECT_EQ(Rational::parse("12"), Rational(12));
	EXPECT_THROW(Rational::parse("1/0"), Error);
	EXPECT_THROW(Rational::parse("x"), Error);
	EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, RoundTripThroughReciprocal)
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<long> dist(-1000, 1000);
	for (int k = 0; k < 500; ++k) {
		long a = dist(rng), b = dist(rng);
		if (a == 0 || b == 0)
			continue;
		Rational q(a, b);
		EXPECT_EQ(q * Rational(b, a), Rational(1));
		EXPECT_GT(q.denominator(), 0);
	}
}

TEST(Rational, NoRounding)
{
	Rational sum;
	for (int k = 1; k <= 30; ++k)
		sum += Rational(1, k * (k + 1));
	EXPECT_EQ(sum, Rational(30, 31));
	EXPECT_EQ(Rational(2, 3).pow(40).denominator(), mpz_class("12157665459056928801"));
}

TEST(TPoly, Arithmetic)
{
	TPoly a = TPoly(1) - TPoly::t();
	TPoly b = TPoly(1) + TPoly::t();
	EXPECT_EQ(a * b, TPoly(1) - TPoly::monomial(Rational(1), 2));
	EXPECT_EQ((a + b).degree(), 0);
	EXPECT_TRUE((a - a).is_zero());
	EXPECT_EQ((a * b).evaluate(Rational(3)), Rational(-8));
	EXPECT_EQ(TPoly().degree(), -1);
}

TEST(Polynomial, Basics)
{
	LieAlgebra L = presets::sl2();
	SymPoly ef = fixtures::poly(L, "e*f");
	EXPECT_EQ(ef.partial(0), fixtures::poly(L, "f"));
	EXPECT_TRUE(ef.partial(2).is_zero());
	EXPECT_EQ(ef.partial(0).partial(1), L.one());
	EXPECT_EQ(to_string(fixtures::poly(L, "h^2 - 2*e*f + 1/3"), L.names()), "-2*e*f + h^2 + 1/3");
	SymPoly zero = ef - ef;
	EXPECT_TRUE(zero.is_zero());
	EXPECT_EQ(zero.size(), 0u);
	EXPECT_THROW(ef + SymPoly(2), DimensionError);
}

TEST(Polynomial, RingAxiomsOnSamples)
{
	auto ps = oracle::random_polys(3, 12, 3, 11);
	for (const auto& a : ps)
		for (const auto& b : ps) {
			EXPECT_EQ(a * b, b * a);
			if (!a.is_zero() && !b.is_zero())
				EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					EXPECT_EQ(a.partial(i).partial(j), a.partial(j).partial(i));
		}
	for (std::size_t k = 0; k + 2 < ps.size(); ++k)
		EXPECT_EQ((ps[k] * ps[k + 1]) * ps[k + 2], ps[k] * (ps[k + 1] * ps[k + 2]));
}

TEST(Polynomial, CanonicalTermMap)
{
	LieAlgebra L = presets::sl2();
	SymPoly a = fixtures::poly(L, "(e + f)^2 - e^2 - f^2");
	SymPoly b = fixtures::poly(L, "2*f*e");
	EXPECT_EQ(a, b);
	for (const auto& [m, c] : a.terms())
		EXPECT_FALSE(c.is_zero());
}

TEST(Polynomial, TCoefficients)
{
	SymPolyT p = lift_to_t(SymPoly::generator(2, 0));
	p += SymPolyT::term(2, Monomial::generator(1), TPoly::monomial(Rational(3), 2));
	EXPECT_EQ(t_degree(p), 2);
	EXPECT_EQ(t_coefficient(p, 2), SymPoly::generator(2, 1) * Rational(3));
	EXPECT_EQ(evaluate_t(p, Rational(0)), SymPoly::generator(2, 0));
}

TEST(Monomials, Enumeration)
{
	EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
	EXPECT_EQ(monomials_up_to(3, 3).size(), 20u);
	auto d2 = monomials_of_degree(2, 2);
	EXPECT_EQ(d2.front()[0], 2);
}

TEST(Nullspace, Examples)
{
	EXPECT_TRUE(nullspace(QMatrix::identity(3)).empty());
	EXPECT_EQ(nullspace(QMatrix::zero(2, 3)).size(), 3u);
	auto ns = nullspace(QMatrix{{1, 1}});
	ASSERT_EQ(ns.size(), 1u);
	EXPECT_EQ(ns[0](0, 0), -ns[0](1, 0));
	EXPECT_FALSE(ns[0].is_zero());
}

TEST(Nullspace, AgreesWithGaussOnRandomMatrices)
{
	std::mt19937 rng(3);
	std::uniform_int_distribution<int> entry(-2, 2);
	std::uniform_int_distribution<int> size(1, 6);
	for (int trial = 0; trial < 200; ++trial) {
		const int r = size(rng), c = size(rng);
		QMatrix m(r, c);
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < c; ++j)
				m(i, j) = Rational(entry(rng), 1 + (i + j) % 3);
		const int rk = oracle::gauss_rank(m);
		EXPECT_EQ(rank(m), rk);
		auto ns = nullspace(m);
		EXPECT_EQ(static_cast<int>(ns.size()) + rk, c);
		QMatrix stacked(c, static_cast<int>(ns.size()));
		for (std::size_t k = 0; k < ns.size(); ++k) {
			EXPECT_TRUE((m * ns[k]).is_zero());
			for (int i = 0; i < c; ++i)
				stacked(i, static_cast<int>(k)) = ns[k](i, 0);
		}
		EXPECT_EQ(oracle::gauss_rank(stacked), static_cast<int>(ns.size()));
	}
}

TEST(QMatrix, InverseAndDeterminant)
{
	QMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
	EXPECT_EQ(determinant(m), Rational(18));
	EXPECT_EQ(m * inverse(m), QMatrix::identity(3));
	EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
	EXPECT_EQ(determinant(QMatrix{{1, 2}, {2, 4}}), Rational(0));
}
