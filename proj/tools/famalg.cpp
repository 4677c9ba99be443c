#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "famalg/config.hpp"
#include "famalg/errors.hpp"
#include "famalg/expression.hpp"
#include "famalg/family.hpp"
#include "famalg/poisson.hpp"
#include "famalg/report.hpp"
#include "famalg/suites.hpp"

using namespace famalg;
using json = nlohmann::json;

namespace {

struct Options {
	std::string spec_path;
	std::string algebra = "sl2";
	std::string rep = "standard";
	std::string out_path;
	bool timing = false;

	int degree = -1;
	std::optional<unsigned> order;
	std::uint64_t seed = 0;
	std::size_t budget = 2000;
	std::string suite;
	std::string file;
	std::string a;
	std::string b;
};

struct Outcome {
	int status = 0;
	std::string text;
	json result;
};

AlgebraSpec load(const Options& o, bool validate)
{
	if (!o.spec_path.empty())
		return load_spec(o.spec_path, validate);
	return preset_spec(o.algebra, o.rep);
}

bool is_matrix(const Expression& e) { return std::holds_alternative<MatPoly>(e); }

MatPoly as_matrix(const Expression& e, int d)
{
	if (const auto* a = std::get_if<SymPoly>(&e))
		return scalar_matrix(d, *a);
	const MatPoly& m = std::get<MatPoly>(e);
	if (m.dim() != d)
		throw DimensionError("expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix, got " +
		                     std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
	return m;
}

Outcome run_check(const AlgebraSpec& spec)
{
	const LieAlgebra& L = spec.algebra;
	ValidityReport problems = validate_lie(L);
	const bool lie_ok = problems.empty();
	if (lie_ok)
		problems = validate_rep(L, spec.representation);

	Outcome out;
	json violations = json::array();
	for (const auto& v : problems)
		violations.push_back({{"kind", v.kind}, {"indices", v.indices}, {"detail", describe(v, L.names())}});
	out.result = {{"valid", problems.empty()}, {"violations", violations}};

	out.text = "algebra " + L.label() + " (dimension " + std::to_string(L.dimension()) + "): " +
	           (lie_ok ? "valid" : "invalid") + "\n";
	if (lie_ok)
		out.text += "representation " + spec.representation.label + " (d = " + std::to_string(spec.representation.d) +
		            "): " + (problems.empty() ? "valid" : "invalid") + "\n";
	else
		out.text += "representation not checked\n";
	for (const auto& v : problems)
		out.text += "  " + describe(v, L.names()) + "\n";
	out.status = problems.empty() ? 0 : 1;
	return out;
}

Outcome run_invariants(const Family& F, int D)
{
	const NameList& names = F.algebra().names();
	auto basis = F.invariant_basis(D);
	Outcome out;
	json elements = json::array();
	out.text = "invariant basis of " + F.algebra().label() + "/" + F.representation().label + " up to degree " +
	           std::to_string(D) + ": " + std::to_string(basis.size()) + " elements\n";
	for (std::size_t i = 0; i < basis.size(); ++i) {
		elements.push_back({{"degree", degree(basis[i])}, {"matrix", matrix_json(basis[i], names)}});
		out.text += "  [" + std::to_string(i + 1) + "] degree " + std::to_string(degree(basis[i])) + ": " +
		            to_string(basis[i], names) + "\n";
	}
	out.result = {{"degree", D}, {"dimension", basis.size()}, {"basis", elements}};
	return out;
}

Outcome run_binary(const Family& F, const std::string& command, const Options& o)
{
	const NameList& names = F.algebra().names();
	Expression a = parse_expression(o.a, names);
	Expression b = parse_expression(o.b, names);
	const bool matrix = is_matrix(a) || is_matrix(b);
	Outcome out;
	out.result = {{"inputs", {o.a, o.b}}};

	if (command == "poisson") {
		std::string v = matrix ? to_string(F.nc_poisson(as_matrix(a, F.d()), as_matrix(b, F.d())), names)
		                       : to_string(poisson_bracket(F.algebra(), std::get<SymPoly>(a), std::get<SymPoly>(b)), names);
		out.result["value"] = v;
		out.text = v + "\n";
		return out;
	}

	// star
	if (o.order) {
		std::string v = matrix ? to_string(F.star_coefficient(as_matrix(a, F.d()), as_matrix(b, F.d()), *o.order), names)
		                       : to_string(F.enveloping().star_coefficient(std::get<SymPoly>(a), std::get<SymPoly>(b),
		                                                                   *o.order),
		                                   names);
		out.result["order"] = *o.order;
		out.result["value"] = v;
		out.text = v + "\n";
		return out;
	}
	json coefficients = json::array();
	std::string v;
	if (matrix) {
		MatPolyT p = F.star_product(as_matrix(a, F.d()), as_matrix(b, F.d()));
		v = to_string(p, names);
		int top = 0;
		for (const auto& e : p.entries())
			top = std::max(top, t_degree(e));
		for (int k = 0; k <= top; ++k)
			coefficients.push_back(matrix_json(t_coefficient(p, static_cast<unsigned>(k)), names));
	} else {
		SymPolyT p = F.enveloping().star_product(std::get<SymPoly>(a), std::get<SymPoly>(b));
		v = to_string(p, names);
		for (int k = 0; k <= std::max(0, t_degree(p)); ++k)
			coefficients.push_back(to_string(t_coefficient(p, static_cast<unsigned>(k)), names));
	}
	out.result["value"] = v;
	out.result["coefficients"] = coefficients;
	out.text = v + "\n";
	return out;
}

Outcome run_unary(const Family& F, const std::string& command, const Options& o)
{
	const NameList& names = F.algebra().names();
	Expression a = parse_expression(o.a, names);
	Outcome out;
	std::string v;
	if (command == "fpbw") {
		v = is_matrix(a) ? to_string(F.fpbw(as_matrix(a, F.d())), names)
		                 : to_string(F.enveloping().pbw_symmetrize(std::get<SymPoly>(a)), names);
	} else {
		MatPoly m = as_matrix(a, F.d());
		if (command == "nabla")
			v = to_string(F.nabla(m), names);
		else if (command == "nabla-prime")
			v = to_string(F.nabla_prime(m), names);
		else
			v = to_string(F.chern_c1(m), names);
	}
	out.result = {{"input", o.a}, {"value", v}};
	out.text = v + "\n";
	return out;
}

Outcome run_suites(const Family& F, const Options& o)
{
	SuiteOptions so;
	so.degree = o.degree < 0 ? 3 : o.degree;
	so.seed = o.seed;
	so.budget = o.budget;

	std::vector<std::string> names;
	if (o.suite == "all")
		names = SuiteRunner::suite_names();
	else
		names.push_back(o.suite);

	SuiteRunner runner(F);
	for (const auto& n : names)
		if (SuiteRunner::needs_invariants(n)) {
			runner.set_invariant_basis(F.invariant_basis(so.degree), so.degree);
			break;
		}

	Outcome out;
	json reports = json::array();
	bool passed = true;
	for (const auto& n : names) {
		SuiteReport r = runner.run(n, so);
		passed = passed && r.passed();
		out.text += suite_text(r, o.timing);
		reports.push_back(suite_json(r, o.timing));
	}
	if (names.size() > 1) {
		std::size_t ok = 0;
		for (const auto& r : reports)
			ok += r["passed"].get<bool>() ? 1 : 0;
		out.text += "summary: " + std::to_string(ok) + "/" + std::to_string(names.size()) + " suites passed\n";
	}
	out.result = {{"passed", passed}, {"suites", reports}};
	out.status = passed ? 0 : 1;
	return out;
}

Outcome run_verify(const Family& F, const Options& o)
{
	std::ifstream in(o.file);
	if (!in)
		throw Error("cannot open " + o.file);
	std::stringstream buffer;
	buffer << in.rdbuf();
	json doc;
	try {
		doc = json::parse(buffer.str());
	} catch (const json::parse_error& e) {
		throw ParseError(std::string("syntax error in ") + o.file, 1, static_cast<int>(e.byte));
	}
	const NameList& names = F.algebra().names();
	if (doc.contains("spec") && doc["spec"]["algebra"].contains("basis") &&
	    doc["spec"]["algebra"]["basis"].get<NameList>() != names)
		throw ValidationError("file was written for a different basis");
	const json* basis = nullptr;
	if (doc.contains("result") && doc["result"].contains("basis"))
		basis = &doc["result"]["basis"];
	if (basis == nullptr || !basis->is_array())
		throw ValidationError(o.file + ": no result/basis list; expected the output of `invariants --out`");

	Outcome out;
	json checked = json::array();
	std::size_t good = 0;
	for (std::size_t i = 0; i < basis->size(); ++i) {
		MatPoly a = matrix_from_json((*basis)[i].at("matrix"), names, F.d());
		const bool ok = F.is_classical_invariant(a);
		good += ok ? 1 : 0;
		checked.push_back({{"matrix", matrix_json(a, names)}, {"invariant", ok}});
		out.text += "  [" + std::to_string(i + 1) + "] " + (ok ? "invariant" : "NOT invariant") + ": " +
		            to_string(a, names) + "\n";
	}
	out.text = std::to_string(good) + "/" + std::to_string(basis->size()) + " elements invariant\n" + out.text;
	out.result = {{"elements", checked}, {"all_invariant", good == basis->size()}};
	out.status = good == basis->size() ? 0 : 1;
	return out;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact computations in Kirillov family algebras End(V) (x) S(g)"};
	app.require_subcommand(1);
	app.fallthrough();

	Options o;
	auto* spec_opt = app.add_option("--spec", o.spec_path, "JSON spec file with algebra and representation");
	auto* alg_opt = app.add_option("--algebra", o.algebra, "Preset algebra: sl2, heisenberg3, affine2, abelian(n)");
	auto* rep_opt = app.add_option("--rep", o.rep, "Preset representation: trivial, standard, adjoint");
	alg_opt->excludes(spec_opt);
	rep_opt->excludes(spec_opt);
	app.add_option("--out", o.out_path, "Also write a JSON report here");
	app.add_flag("--timing", o.timing, "Include wall time in reports");

	app.add_subcommand("check", "Validate the algebra and representation");
	auto* inv = app.add_subcommand("invariants", "Basis of invariant matrix polynomials");
	inv->add_option("--degree", o.degree, "Degree bound")->required()->check(CLI::NonNegativeNumber);
	auto* star = app.add_subcommand("star", "Star product A *_t B");
	star->add_option("A", o.a)->required();
	star->add_option("B", o.b)->required();
	star->add_option("--order", o.order, "Only the t^k coefficient");
	auto* pois = app.add_subcommand("poisson", "Poisson bracket {A, B}");
	pois->add_option("A", o.a)->required();
	pois->add_option("B", o.b)->required();
	for (const char* name : {"nabla", "nabla-prime", "c1", "fpbw"})
		app.add_subcommand(name, std::string(name) + " of A")->add_option("A", o.a)->required();
	auto* suite = app.add_subcommand("suite", "Run an identity suite, or all of them");
	suite->add_option("name", o.suite, "Suite name or 'all'")->required();
	suite->add_option("--degree", o.degree, "Degree bound (default 3)")->check(CLI::NonNegativeNumber);
	suite->add_option("--seed", o.seed, "Sampling seed");
	suite->add_option("--budget", o.budget, "Tuples per check before sampling; 0 = no limit");
	auto* verify = app.add_subcommand("verify-invariants", "Re-check a basis written by `invariants --out`");
	verify->add_option("file", o.file)->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	const std::string command = app.get_subcommands().front()->get_name();
	try {
		Outcome out;
		AlgebraSpec spec = load(o, command != "check");
		if (command == "check") {
			out = run_check(spec);
		} else {
			Family F(spec.algebra, spec.representation);
			if (command == "invariants")
				out = run_invariants(F, o.degree);
			else if (command == "star" || command == "poisson")
				out = run_binary(F, command, o);
			else if (command == "suite")
				out = run_suites(F, o);
			else if (command == "verify-invariants")
				out = run_verify(F, o);
			else
				out = run_unary(F, command, o);
		}
		std::cout << out.text;
		if (!o.out_path.empty()) {
			json doc = {{"schema", report_schema}, {"command", command}, {"spec", spec_json(spec)},
			            {"result", out.result}, {"status", out.status}};
			std::ofstream file(o.out_path);
			if (!file)
				throw Error("cannot write " + o.out_path);
			file << dump(doc);
		}
		return out.status;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
