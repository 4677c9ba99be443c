#include "famalg/report.hpp"

#include <cstdio>

#include "famalg/errors.hpp"
#include "famalg/expression.hpp"

namespace famalg {

using json = nlohmann::json;

namespace {

json qmatrix_json(const QMatrix& m)
{
	json rows = json::array();
	for (int r = 0; r < m.rows(); ++r) {
		json row = json::array();
		for (int c = 0; c < m.cols(); ++c)
			row.push_back(m(r, c).to_string());
		rows.push_back(std::move(row));
	}
	return rows;
}

const char* expect_name(Expect e) { return e == Expect::zero ? "zero" : "record"; }

std::string seconds_string(double s)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.3f", s);
	return buf;
}

} // namespace

json spec_json(const AlgebraSpec& spec)
{
	const LieAlgebra& L = spec.algebra;
	const int n = L.dimension();
	json brackets = json::array();
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = 0; k < n; ++k)
				if (!L.c(i, j, k).is_zero())
					brackets.push_back({i + 1, j + 1, k + 1, L.c(i, j, k).to_string()});
	json matrices = json::array();
	for (const auto& t : spec.representation.tau)
		matrices.push_back(qmatrix_json(t));
	return {
	    {"algebra", {{"label", L.label()}, {"basis", L.names()}, {"brackets", brackets}}},
	    {"representation", {{"label", spec.representation.label}, {"matrices", matrices}}},
	};
}

json matrix_json(const MatPoly& a, const NameList& names)
{
	json rows = json::array();
	for (int p = 0; p < a.dim(); ++p) {
		json row = json::array();
		for (int q = 0; q < a.dim(); ++q)
			row.push_back(to_string(a(p, q), names));
		rows.push_back(std::move(row));
	}
	return rows;
}

MatPoly matrix_from_json(const json& rows, const NameList& names, int d)
{
	if (!rows.is_array() || static_cast<int>(rows.size()) != d)
		throw DimensionError("expected " + std::to_string(d) + " rows");
	MatPoly out(d, SymPoly(static_cast<int>(names.size())));
	for (int p = 0; p < d; ++p) {
		const json& row = rows[static_cast<std::size_t>(p)];
		if (!row.is_array() || static_cast<int>(row.size()) != d)
			throw DimensionError("row " + std::to_string(p + 1) + " should have " + std::to_string(d) + " entries");
		for (int q = 0; q < d; ++q) {
			const json& e = row[static_cast<std::size_t>(q)];
			if (!e.is_string())
				throw ParseError("matrix entries must be expression strings", 1, 1);
			out(p, q) = parse_polynomial(e.get<std::string>(), names);
		}
	}
	return out;
}

json suite_json(const SuiteReport& r, bool timing)
{
	json checks = json::array();
	for (const auto& c : r.checks) {
		json residuals = json::array();
		for (const auto& res : c.residuals)
			residuals.push_back({{"inputs", res.inputs}, {"value", res.value}});
		checks.push_back({
		    {"identity", c.identity},
		    {"domain", c.domain},
		    {"expect", expect_name(c.expect)},
		    {"candidates", c.candidates},
		    {"tuples", c.tuples},
		    {"nonzero", c.nonzero},
		    {"holds", c.holds()},
		    {"ok", c.ok()},
		    {"residuals", residuals},
		});
	}
	json out = {
	    {"suite", r.suite},
	    {"algebra", r.algebra},
	    {"representation", r.representation},
	    {"degree", r.degree},
	    {"seed", r.seed},
	    {"budget", r.budget},
	    {"tuples", r.tuples()},
	    {"passed", r.passed()},
	    {"checks", checks},
	    {"notes", r.notes},
	};
	if (timing)
		out["seconds"] = r.seconds;
	return out;
}

std::string suite_text(const SuiteReport& r, bool timing)
{
	std::string out = "suite " + r.suite + "  (" + r.algebra + "/" + r.representation +
	                  ", degree <= " + std::to_string(r.degree) + ", seed " + std::to_string(r.seed) + ")\n";
	for (const auto& n : r.notes)
		out += "  note: " + n + "\n";
	for (const auto& c : r.checks) {
		std::string status;
		if (c.expect == Expect::zero)
			status = c.holds() ? "ok  " : "FAIL";
		else
			status = c.holds() ? "holds" : "fails";
		std::string counts = std::to_string(c.tuples);
		if (c.tuples != c.candidates)
			counts += " of " + std::to_string(c.candidates) + " sampled";
		out += "  " + status + "  " + c.identity + "  [" + c.domain + "]  tuples " + counts;
		if (!c.holds())
			out += ", nonzero " + std::to_string(c.nonzero);
		out += "\n";
		for (const auto& res : c.residuals) {
			std::string args;
			for (const auto& a : res.inputs)
				args += (args.empty() ? "" : ", ") + a;
			out += "        (" + args + ") -> " + res.value + "\n";
		}
		if (c.nonzero > c.residuals.size())
			out += "        ... " + std::to_string(c.nonzero - c.residuals.size()) + " more\n";
	}
	out += std::string("  result ") + (r.passed() ? "PASS" : "FAIL");
	if (timing)
		out += "  (" + seconds_string(r.seconds) + " s)";
	return out + "\n";
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace famalg
