#include <gtest/gtest.h>

#include "famalg/errors.hpp"
#include "famalg/lie_algebra.hpp"
#include "famalg/poisson.hpp"
#include "famalg/suites.hpp"
#include "oracles.hpp"

using namespace famalg;

namespace {

std::vector<LieAlgebra> all_presets()
{
	return {presets::sl2(), presets::heisenberg3(), presets::affine2(), presets::abelian(3)};
}

} // namespace

TEST(Lie, PresetsAreValid)
{
	for (const auto& L : all_presets()) {
		EXPECT_TRUE(validate_lie(L).empty()) << L.label();
		EXPECT_TRUE(validate_rep(L, presets::adjoint(L)).empty()) << L.label();
		EXPECT_TRUE(validate_rep(L, presets::trivial(L)).empty()) << L.label();
	}
	for (const auto& name : {"sl2", "heisenberg3", "affine2"}) {
		LieAlgebra L = presets::algebra(name);
		EXPECT_TRUE(validate_rep(L, presets::standard(L)).empty()) << name;
	}
	EXPECT_THROW(presets::standard(presets::abelian(2)), ValidationError);
}

TEST(Lie, Sl2Brackets)
{
	LieAlgebra L = presets::sl2();
	EXPECT_EQ(L.names(), (NameList{"e", "f", "h"}));
	EXPECT_EQ(L.bracket_form(0, 1), fixtures::poly(L, "h"));
	EXPECT_EQ(L.bracket_form(2, 0), fixtures::poly(L, "2*e"));
	EXPECT_EQ(L.bracket_form(2, 1), fixtures::poly(L, "-2*f"));
}

TEST(Lie, AntisymmetryViolationIsLocated)
{
	NameList names{"p", "q", "z"};
	try {
		LieAlgebra::from_brackets("bad", names, {{0, 1, 2, Rational(1)}, {1, 0, 2, Rational(1)}});
		FAIL() << "expected a ValidationError";
	} catch (const ValidationError& e) {
		EXPECT_NE(std::string(e.what()).find("(1,2,3)"), std::string::npos) << e.what();
	}
}

TEST(Lie, JacobiViolationReported)
{
	// [x1,x2] = x3, [x2,x3] = x1, [x1,x3] = x1 is antisymmetric but not Lie.
	LieAlgebra L = LieAlgebra::from_brackets(
	    "bad", {"x1", "x2", "x3"},
	    {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 0, Rational(1)}});
	auto report = validate_lie(L);
	ASSERT_FALSE(report.empty());
	EXPECT_EQ(report.front().kind, "jacobi");
}

TEST(Lie, RepresentationViolationReported)
{
	LieAlgebra L = presets::sl2();
	Representation R = presets::standard(L);
	R.tau[2] = R.tau[2] * Rational(2);
	auto report = validate_rep(L, R);
	ASSERT_FALSE(report.empty());
	EXPECT_EQ(report.front().kind, "representation");
}

TEST(Lie, KillingFormOfSl2)
{
	QMatrix B = killing_form(presets::sl2());
	EXPECT_EQ(B(0, 1), Rational(4));
	EXPECT_EQ(B(2, 2), Rational(8));
	EXPECT_EQ(B(0, 0), Rational(0));
	EXPECT_EQ(B(0, 2), Rational(0));
}

TEST(Lie, CasimirOfSl2)
{
	LieAlgebra L = presets::sl2();
	EXPECT_EQ(casimir(L), fixtures::poly(L, "1/2*e*f + 1/8*h^2"));
	EXPECT_THROW(casimir(presets::heisenberg3()), NotSemisimpleError);
}

TEST(Lie, CasimirIsPoissonCentral)
{
	LieAlgebra L = presets::sl2();
	SymPoly cas = casimir(L);
	for (int j = 0; j < 3; ++j)
		EXPECT_TRUE(poisson_bracket(L, cas, L.generator(j)).is_zero());
	EXPECT_TRUE(sym_ad_invariant(L, cas));
}

TEST(Lie, DiagonalRescaling)
{
	// X~_1 = 2e, X~_2 = f, X~_3 = h: [X~_1, X~_2] = 2h = 2 X~_3.
	LieAlgebra L = change_basis(presets::sl2(), {QMatrix::diagonal({2, 1, 1})});
	EXPECT_EQ(L.c(0, 1, 2), Rational(2));
	EXPECT_EQ(L.c(1, 0, 2), Rational(-2));
}

TEST(Lie, BasisChangeProperties)
{
	for (const auto& L : all_presets()) {
		const int n = L.dimension();
		QMatrix B = killing_form(L);
		for (const QMatrix& T : sample_basis_changes(n, 5, 21)) {
			LieAlgebra Lt = change_basis(L, {T});
			EXPECT_TRUE(validate_lie(Lt).empty()) << L.label();
			EXPECT_EQ(killing_form(Lt), T.transpose() * B * T) << L.label();
			EXPECT_EQ(change_basis(Lt, {inverse(T)}), L) << L.label();
			Representation R = transport(presets::adjoint(L), {T});
			EXPECT_TRUE(validate_rep(Lt, R).empty()) << L.label();
		}
	}
}

TEST(Lie, TransportIsAHomomorphism)
{
	LieAlgebra L = presets::sl2();
	BasisChange T{sample_basis_changes(3, 1, 5).front()};
	LieAlgebra Lt = change_basis(L, T);
	auto ps = oracle::random_polys(3, 6, 2, 9);
	for (const auto& a : ps)
		for (const auto& b : ps) {
			EXPECT_EQ(transport(a * b, T), transport(a, T) * transport(b, T));
			EXPECT_EQ(transport(poisson_bracket(L, a, b), T),
			          poisson_bracket(Lt, transport(a, T), transport(b, T)));
		}
}

TEST(Lie, SampledBasisChangesAreInvertible)
{
	auto Ts = sample_basis_changes(3, 10, 1);
	ASSERT_EQ(Ts.size(), 10u);
	for (const auto& T : Ts) {
		EXPECT_FALSE(determinant(T).is_zero());
		EXPECT_NE(T, QMatrix::identity(3));
	}
	EXPECT_EQ(Ts, sample_basis_changes(3, 10, 1));
}
