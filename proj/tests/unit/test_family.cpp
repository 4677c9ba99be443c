#include <gtest/gtest.h>

#include "famalg/errors.hpp"
#include "famalg/family.hpp"
#include "famalg/poisson.hpp"
#include "famalg/suites.hpp"
#include "oracles.hpp"

using namespace famalg;
using fixtures::mat;

namespace {

const char* kM = "[[h/2, f], [e, -h/2]]";

/// Rank of the coordinate vectors of a set of matrix polynomials.
int span_rank(const std::vector<MatPoly>& v, int D)
{
	if (v.empty())
		return 0;
	const int d = v.front().dim();
	const int n = v.front()(0, 0).generator_count();
	auto monos = monomials_up_to(n, D);
	QMatrix m(static_cast<int>(v.size()), d * d * static_cast<int>(monos.size()));
	for (std::size_t r = 0; r < v.size(); ++r) {
		int col = 0;
		for (int p = 0; p < d; ++p)
			for (int q = 0; q < d; ++q)
				for (const auto& mono : monos)
					m(static_cast<int>(r), col++) = v[r](p, q).coefficient(mono);
	}
	return oracle::gauss_rank(m);
}

} // namespace

TEST(Family, RejectsNonRepresentations)
{
	LieAlgebra L = presets::sl2();
	Representation R = presets::standard(L);
	R.tau[0] = R.tau[1];
	EXPECT_THROW(Family(L, R), ValidationError);
}

TEST(Family, MembershipOfM)
{
	const Family& F = fixtures::sl2_standard();
	MatPoly M = mat(F, kM);
	EXPECT_TRUE(F.is_classical_invariant(M));
	EXPECT_TRUE(F.is_quantum_invariant(F.fpbw(M)));
	EXPECT_FALSE(F.is_classical_invariant(mat(F, "[[e, 0], [0, 0]]")));
	EXPECT_FALSE(F.is_quantum_invariant(F.fpbw(mat(F, "[[e, 0], [0, 0]]"))));
}

TEST(Family, MSquaredIsCentral)
{
	const Family& F = fixtures::sl2_standard();
	MatPoly M = mat(F, kM);
	EXPECT_EQ(mat_mul(M, M), F.scalar(fixtures::poly(F.algebra(), "h^2/4 + e*f")));
}

TEST(Family, FpbwExamples)
{
	const Family& F = fixtures::sl2_standard();
	const LieAlgebra& L = F.algebra();
	MatPoly M = mat(F, kM);
	EXPECT_EQ(specialize(F.fpbw(M), Rational(1)), M);
	EXPECT_EQ(t_coefficient(F.fpbw_inverse(F.fpbw(M)), 0), M);
	EXPECT_TRUE(t_coefficient(F.fpbw_inverse(F.fpbw(M)), 1).is_zero());
	MatUE sym = F.fpbw(F.scalar(fixtures::poly(L, "e*f")));
	SymPolyT expected = lift_to_t(fixtures::poly(L, "e*f"));
	expected += lift_to_t(fixtures::poly(L, "-1/2*h")).scaled(TPoly::t());
	EXPECT_EQ(sym(0, 0).terms(), expected);
	EXPECT_TRUE(sym(0, 1).is_zero());
	EXPECT_EQ(F.fpbw(F.identity()), F.fpbw(F.scalar(L.one())));
}

TEST(Family, InvariantDimensionsMatchOracle)
{
	const Family& F = fixtures::sl2_standard();
	const int expected[] = {1, 2, 3, 4};
	for (int D = 0; D <= 3; ++D) {
		auto basis = F.invariant_basis(D);
		EXPECT_EQ(static_cast<int>(basis.size()), expected[D]) << "D=" << D;
		EXPECT_EQ(static_cast<int>(basis.size()),
		          oracle::invariant_dimension(F.algebra(), F.representation(), D));
		EXPECT_EQ(span_rank(basis, D), static_cast<int>(basis.size()));
		for (const auto& A : basis)
			EXPECT_TRUE(F.is_classical_invariant(A));
	}
	for (const Family* G : {&fixtures::sl2_adjoint(), &fixtures::affine2_standard()})
		for (int D = 0; D <= 2; ++D)
			EXPECT_EQ(static_cast<int>(G->invariant_basis(D).size()),
			          oracle::invariant_dimension(G->algebra(), G->representation(), D));
}

TEST(Family, DegreeOneBasisSpansIdAndM)
{
	const Family& F = fixtures::sl2_standard();
	auto basis = F.invariant_basis(1);
	ASSERT_EQ(basis.size(), 2u);
	std::vector<MatPoly> both = basis;
	both.push_back(F.identity());
	both.push_back(mat(F, kM));
	EXPECT_EQ(span_rank(both, 1), 2);
}

TEST(Family, ClosureOnInvariants)
{
	for (const Family* F : {&fixtures::sl2_standard(), &fixtures::sl2_adjoint(), &fixtures::affine2_standard()}) {
		auto basis = F->invariant_basis(2);
		for (const auto& A : basis) {
			EXPECT_TRUE(F->is_classical_invariant(F->nabla(A)));
			EXPECT_TRUE(F->is_classical_invariant(F->nabla_prime(A)));
			EXPECT_TRUE(F->is_classical_invariant(F->chern_c1(A)));
			EXPECT_TRUE(F->is_quantum_invariant(F->fpbw(A)));
			for (const auto& B : basis) {
				EXPECT_TRUE(F->is_classical_invariant(mat_mul(A, B)));
				EXPECT_TRUE(F->is_classical_invariant(F->nc_poisson(A, B)));
			}
		}
	}
}

TEST(Family, ScalarEmbeddings)
{
	const Family& F = fixtures::sl2_standard();
	const LieAlgebra& L = F.algebra();
	for (const auto& m : monomials_up_to(3, 2)) {
		SymPoly a = SymPoly::term(3, m, Rational(1));
		EXPECT_EQ(F.is_classical_invariant(F.scalar(a)), sym_ad_invariant(L, a));
	}
	SymPoly cas = casimir(L);
	EXPECT_TRUE(F.is_classical_invariant(F.scalar(cas)));
}

TEST(Family, NablaOfCasimir)
{
	const Family& F = fixtures::sl2_standard();
	MatPoly N = F.nabla(F.scalar(casimir(F.algebra())));
	EXPECT_EQ(N, Rational(1, 2) * mat(F, kM));
	EXPECT_EQ(degree(N), 1);
	EXPECT_FALSE(N.is_zero());
	// Not Id (x) a: off-diagonal entries survive.
	EXPECT_FALSE(N(0, 1).is_zero());
}

TEST(Family, NablaAgreesWithNablaPrimeOnSl2)
{
	const Family& F = fixtures::sl2_standard();
	for (const auto& A : F.invariant_basis(2))
		EXPECT_EQ(F.nabla(A), F.nabla_prime(A));
}

TEST(Family, ChernClassOnAffine2)
{
	const Family& F = fixtures::affine2_standard();
	const LieAlgebra& L = F.algebra();
	// c^j_aj = 1 for [a,b] = b, so c1 = d/da entrywise.
	EXPECT_EQ(L.ad_trace(0), Rational(1));
	EXPECT_EQ(L.ad_trace(1), Rational(0));
	EXPECT_EQ(F.chern_c1(F.scalar(fixtures::poly(L, "a^2*b"))), F.scalar(fixtures::poly(L, "2*a*b")));
	for (const auto& A : F.invariant_basis(2))
		EXPECT_EQ(F.nabla(A) - F.nabla_prime(A), -F.chern_c1(A));
	EXPECT_TRUE(fixtures::sl2_standard().chern_c1(mat(fixtures::sl2_standard(), kM)).is_zero());
}

TEST(Family, ChernClassOnSolvableInvariants)
{
	LieAlgebra L = LieAlgebra::from_brackets("r3", {"a", "b", "c"}, {{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(-2)}});
	Family F(L, presets::adjoint(L));
	int nonzero = 0;
	for (const auto& A : F.invariant_basis(3)) {
		EXPECT_EQ(F.nabla(A) - F.nabla_prime(A), -F.chern_c1(A));
		nonzero += F.chern_c1(A).is_zero() ? 0 : 1;
	}
	EXPECT_GT(nonzero, 0);
	EXPECT_EQ(F.invariant_basis(3).size(),
	          static_cast<std::size_t>(oracle::invariant_dimension(L, F.representation(), 3)));
}

TEST(Family, NablaIsBasisIndependent)
{
	for (const Family* F : {&fixtures::sl2_standard(), &fixtures::affine2_standard()}) {
		for (const QMatrix& T : sample_basis_changes(F->n(), 3, 17)) {
			BasisChange fwd{T}, back{inverse(T)};
			Family G = change_basis(*F, fwd);
			for (const auto& A : F->spanning_set(2)) {
				EXPECT_EQ(transport(G.nabla(transport(A, fwd)), back), F->nabla(A));
				EXPECT_EQ(transport(G.nabla_prime(transport(A, fwd)), back), F->nabla_prime(A));
			}
		}
	}
}

TEST(Family, NcPoissonAndPhiEntrywise)
{
	const Family& F = fixtures::sl2_standard();
	const LieAlgebra& L = F.algebra();
	MatPoly A = F.unit(0, 1, Monomial::generator(0));
	MatPoly B = F.unit(1, 0, Monomial::generator(1));
	EXPECT_EQ(F.nc_poisson(A, B), F.unit(0, 0, Monomial::generator(2)));
	EXPECT_TRUE(F.nc_poisson(B, B).is_zero());
	EXPECT_EQ(F.phi(F.scalar(fixtures::poly(L, "e^2")), F.scalar(fixtures::poly(L, "f"))),
	          F.scalar(fixtures::poly(L, "-4/3*e")));
}

TEST(Family, StarProductOfFamily)
{
	const Family& F = fixtures::sl2_standard();
	MatPoly M = mat(F, kM);
	EXPECT_EQ(F.star_coefficient(M, M, 0), mat_mul(M, M));
	EXPECT_EQ(F.star_coefficient(M, M, 1), Rational(1, 2) * F.nc_poisson(M, M));
	MatUE prod = F.mat_mul(F.fpbw(M), F.fpbw(M));
	EXPECT_EQ(F.fpbw_inverse(prod), F.star_product(M, M));
}

TEST(Family, SpanningSetSize)
{
	const Family& F = fixtures::sl2_standard();
	EXPECT_EQ(F.spanning_set(2).size(), 4u * 10u);
	EXPECT_EQ(F.spanning_set(0).front(), F.unit(0, 0, Monomial()));
}

TEST(Family, AbelianNablaIsContractedGradient)
{
	Family F(presets::abelian(2), Representation{"diag", 2, {QMatrix{{1, 0}, {0, 0}}, QMatrix{{0, 0}, {0, 3}}}});
	MatPoly A = F.scalar(SymPoly::generator(2, 0) * SymPoly::generator(2, 1));
	MatPoly expected = tensor(F.tau(0), SymPoly::generator(2, 1)) + tensor(F.tau(1), SymPoly::generator(2, 0));
	EXPECT_EQ(F.nabla(A), expected);
	EXPECT_TRUE(F.nc_poisson(A, A).is_zero());
}
