#include <gtest/gtest.h>

#include "famalg/config.hpp"
#include "famalg/errors.hpp"
#include "famalg/expression.hpp"
#include "famalg/report.hpp"
#include "oracles.hpp"

using namespace famalg;

TEST(Expression, Polynomials)
{
	LieAlgebra L = presets::sl2();
	EXPECT_EQ(to_string(parse_polynomial("3/4*e^2*f - h", L.names()), L.names()), "3/4*e^2*f - h");
	EXPECT_EQ(parse_polynomial("(e - f)*(e + f)", L.names()), parse_polynomial("e^2 - f^2", L.names()));
	EXPECT_EQ(parse_polynomial("h/2", L.names()), parse_polynomial("1/2*h", L.names()));
	EXPECT_EQ(parse_polynomial("-(-e)", L.names()), L.generator(0));
	EXPECT_EQ(parse_polynomial(" 0 ", L.names()), L.zero());
}

TEST(Expression, Matrices)
{
	LieAlgebra L = presets::sl2();
	MatPoly M = parse_matrix("[[h/2, f], [e, -h/2]]", L.names(), 2);
	EXPECT_EQ(M(1, 0), L.generator(0));
	EXPECT_EQ(parse_matrix("e*f", L.names(), 2), scalar_matrix(2, parse_polynomial("e*f", L.names())));
	EXPECT_TRUE(std::holds_alternative<MatPoly>(parse_expression("[[1]]", L.names())));
	EXPECT_THROW(parse_matrix("[[1, 0], [0, 1]]", L.names(), 3), DimensionError);
	EXPECT_EQ(to_string(M, L.names()), "[[1/2*h, f], [e, -1/2*h]]");
}

TEST(Expression, ErrorsCarryColumns)
{
	LieAlgebra L = presets::sl2();
	auto column_of = [&](const char* text) {
		try {
			parse_expression(text, L.names());
		} catch (const ParseError& e) {
			EXPECT_EQ(e.line, 1);
			return e.column;
		}
		ADD_FAILURE() << "no error for " << text;
		return -1;
	};
	EXPECT_EQ(column_of("e + x"), 5);
	EXPECT_EQ(column_of("e *"), 4);
	EXPECT_EQ(column_of("e/f"), 2);
	EXPECT_EQ(column_of("[[e, f], [h]]"), 13);
	EXPECT_GT(column_of("e/0"), 0);
	EXPECT_GT(column_of("(e"), 0);
}

TEST(Config, Presets)
{
	AlgebraSpec s = parse_spec(R"j({"algebra": "sl2", "representation": "standard"})j");
	EXPECT_EQ(s.algebra, presets::sl2());
	EXPECT_EQ(s.representation.d, 2);
	AlgebraSpec a = parse_spec(R"j({"algebra": "abelian(4)"})j");
	EXPECT_EQ(a.algebra.dimension(), 4);
	EXPECT_EQ(a.representation.d, 1);
}

TEST(Config, ExplicitHeisenberg)
{
	AlgebraSpec s = parse_spec(R"j({"algebra": {"basis": ["p", "q", "z"], "brackets": [[1, 2, 3, "1"]]}})j");
	EXPECT_EQ(s.algebra.constants(), presets::heisenberg3().constants());
	AlgebraSpec d = parse_spec(R"j({"algebra": {"dimension": 2, "brackets": [[1, 2, 2, "1"]]},
	                               "representation": {"matrices": [[["1", "0"], ["0", "0"]],
	                                                               [["0", "1"], ["0", "0"]]]}})j");
	EXPECT_EQ(d.algebra.names(), (NameList{"x1", "x2"}));
	EXPECT_TRUE(validate_rep(d.algebra, d.representation).empty());
}

TEST(Config, AntisymmetryError)
{
	try {
		parse_spec(R"j({"algebra": {"basis": ["p", "q", "z"], "brackets": [[1, 2, 3, "1"], [2, 1, 3, "1"]]}})j");
		FAIL();
	} catch (const ValidationError& e) {
		const std::string what = e.what();
		EXPECT_NE(what.find("antisymmetry"), std::string::npos) << what;
		EXPECT_NE(what.find("(1,2,3)"), std::string::npos) << what;
	}
}

TEST(Config, SyntaxErrorLocated)
{
	try {
		parse_spec("{\n  \"algebra\": \"sl2\",\n  \"representation\" \"standard\"\n}");
		FAIL();
	} catch (const ParseError& e) {
		EXPECT_EQ(e.line, 3);
		EXPECT_GT(e.column, 1);
	}
}

TEST(Config, StructuralErrorsNamePaths)
{
	auto message = [](const char* text) -> std::string {
		try {
			parse_spec(text);
		} catch (const ValidationError& e) {
			return e.what();
		}
		return "";
	};
	EXPECT_NE(message(R"j({"algebra": "sl2", "extra": 1})j").find("/extra"), std::string::npos);
	EXPECT_NE(message(R"j({"algebra": {"basis": ["a", "b"], "brackets": [[1, 3, 2, "1"]]}})j").find("/algebra/brackets/0/1"),
	          std::string::npos);
	EXPECT_NE(message(R"j({"algebra": "sl2", "representation": {"matrices": [[["1"]]]}})j").find("/representation/matrices"),
	          std::string::npos);
	EXPECT_NE(message(R"j({"algebra": "so3"})j").find("/algebra"), std::string::npos);
	// sl2 generators acting by 1x1 identity break [e,f] = h.
	EXPECT_NE(message(R"j({"algebra": "sl2", "representation": {"matrices": [[["1"]], [["1"]], [["1"]]]}})j")
	              .find("representation"),
	          std::string::npos);
}

TEST(Config, JacobiViolationListed)
{
	std::string text = R"j({"algebra": {"dimension": 3,
	    "brackets": [[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 1, "1"]]}})j";
	try {
		parse_spec(text);
		FAIL();
	} catch (const ValidationError& e) {
		EXPECT_NE(std::string(e.what()).find("Jacobi"), std::string::npos) << e.what();
	}
	EXPECT_NO_THROW(parse_spec(text, false));
}

TEST(Report, MatrixRoundTrip)
{
	const Family& F = fixtures::sl2_standard();
	for (const auto& A : F.invariant_basis(2)) {
		auto rows = matrix_json(A, F.algebra().names());
		EXPECT_EQ(matrix_from_json(rows, F.algebra().names(), 2), A);
	}
}

TEST(Report, SpecRoundTrip)
{
	AlgebraSpec s = preset_spec("affine2", "standard");
	AlgebraSpec back = parse_spec(spec_json(s).dump());
	EXPECT_EQ(back.algebra, s.algebra);
	EXPECT_EQ(back.representation.tau, s.representation.tau);
}
