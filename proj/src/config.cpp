#include "famalg/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what)
{
	throw ValidationError((path.empty() ? std::string("/") : path) + ": " + what);
}

Rational rational_at(const json& v, const std::string& path)
{
	if (v.is_number_integer())
		return Rational(v.get<long long>());
	if (!v.is_string())
		bad(path, "expected a rational string \"p\" or \"p/q\"");
	try {
		return Rational::parse(v.get<std::string>());
	} catch (const std::exception&) {
		bad(path, "malformed rational '" + v.get<std::string>() + "'");
	}
}

int index_at(const json& v, const std::string& path, int n)
{
	if (!v.is_number_integer())
		bad(path, "expected a 1-based generator index");
	long long i = v.get<long long>();
	if (i < 1 || i > n)
		bad(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
	return static_cast<int>(i - 1);
}

LieAlgebra algebra_at(const json& v, const std::string& path)
{
	if (v.is_string()) {
		try {
			return presets::algebra(v.get<std::string>());
		} catch (const Error& e) {
			bad(path, e.what());
		}
	}
	if (!v.is_object())
		bad(path, "expected a preset name or an object");

	NameList names;
	if (v.contains("basis")) {
		const json& basis = v["basis"];
		if (!basis.is_array() || basis.empty())
			bad(path + "/basis", "expected a nonempty list of names");
		for (std::size_t i = 0; i < basis.size(); ++i) {
			const std::string p = path + "/basis/" + std::to_string(i);
			if (!basis[i].is_string())
				bad(p, "expected a name");
			const std::string name = basis[i].get<std::string>();
			if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
				bad(p, "generator names must start with a letter or '_'");
			for (char c : name)
				if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
					bad(p, "generator names may only contain letters, digits and '_'");
			if (std::find(names.begin(), names.end(), name) != names.end())
				bad(p, "duplicate generator '" + name + "'");
			names.push_back(name);
		}
	}
	if (v.contains("dimension")) {
		const json& dim = v["dimension"];
		if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > kMaxGenerators)
			bad(path + "/dimension", "expected an integer in 1.." + std::to_string(kMaxGenerators));
		const int n = static_cast<int>(dim.get<long long>());
		if (names.empty())
			for (int i = 1; i <= n; ++i)
				names.push_back("x" + std::to_string(i));
		else if (static_cast<int>(names.size()) != n)
			bad(path + "/dimension", "does not match the basis length " + std::to_string(names.size()));
	}
	if (names.empty())
		bad(path, "explicit algebras need \"basis\" or \"dimension\"");
	if (static_cast<int>(names.size()) > kMaxGenerators)
		bad(path + "/basis", "at most " + std::to_string(kMaxGenerators) + " generators supported");

	const int n = static_cast<int>(names.size());
	std::vector<BracketEntry> brackets;
	if (v.contains("brackets")) {
		const json& list = v["brackets"];
		if (!list.is_array())
			bad(path + "/brackets", "expected a list of [i, j, k, \"c\"] entries");
		for (std::size_t e = 0; e < list.size(); ++e) {
			const std::string p = path + "/brackets/" + std::to_string(e);
			const json& entry = list[e];
			if (!entry.is_array() || entry.size() != 4)
				bad(p, "expected [i, j, k, \"c\"]");
			brackets.push_back({index_at(entry[0], p + "/0", n), index_at(entry[1], p + "/1", n),
			                    index_at(entry[2], p + "/2", n), rational_at(entry[3], p + "/3")});
		}
	}
	std::string label = "custom";
	if (v.contains("label")) {
		if (!v["label"].is_string())
			bad(path + "/label", "expected a string");
		label = v["label"].get<std::string>();
	}
	try {
		return LieAlgebra::from_brackets(label, names, brackets);
	} catch (const ValidationError& e) {
		bad(path + "/brackets", e.what());
	}
}

QMatrix matrix_at(const json& v, const std::string& path, int d)
{
	if (!v.is_array() || static_cast<int>(v.size()) != d)
		bad(path, "expected " + std::to_string(d) + " rows");
	QMatrix m(d, d);
	for (int r = 0; r < d; ++r) {
		const std::string p = path + "/" + std::to_string(r);
		const json& row = v[static_cast<std::size_t>(r)];
		if (!row.is_array() || static_cast<int>(row.size()) != d)
			bad(p, "expected " + std::to_string(d) + " entries");
		for (int c = 0; c < d; ++c)
			m(r, c) = rational_at(row[static_cast<std::size_t>(c)], p + "/" + std::to_string(c));
	}
	return m;
}

Representation representation_at(const json& v, const std::string& path, const LieAlgebra& L)
{
	if (v.is_string()) {
		try {
			return presets::representation(L, v.get<std::string>());
		} catch (const Error& e) {
			bad(path, e.what());
		}
	}
	if (!v.is_object() || !v.contains("matrices"))
		bad(path, "expected a preset name or an object with \"matrices\"");
	const json& list = v["matrices"];
	if (!list.is_array() || static_cast<int>(list.size()) != L.dimension())
		bad(path + "/matrices", "expected one matrix per generator (" + std::to_string(L.dimension()) + ")");
	const json& first = list[0];
	if (!first.is_array() || first.empty())
		bad(path + "/matrices/0", "expected a nonempty square matrix");
	const int d = static_cast<int>(first.size());
	Representation R;
	R.label = "custom";
	if (v.contains("label")) {
		if (!v["label"].is_string())
			bad(path + "/label", "expected a string");
		R.label = v["label"].get<std::string>();
	}
	R.d = d;
	for (std::size_t i = 0; i < list.size(); ++i)
		R.tau.push_back(matrix_at(list[i], path + "/matrices/" + std::to_string(i), d));
	return R;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte)
{
	int line = 1;
	int column = 1;
	for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
		if (text[i] == '\n') {
			++line;
			column = 1;
		} else {
			++column;
		}
	}
	return {line, column};
}

} // namespace

AlgebraSpec parse_spec(std::string_view text, bool validate)
{
	json doc;
	try {
		doc = json::parse(text.begin(), text.end());
	} catch (const json::parse_error& e) {
		auto [line, column] = line_column(text, e.byte);
		std::string what = e.what();
		// Drop the library's own "[json.exception.parse_error.101] parse error at ...: " prefix.
		if (auto cut = what.find(": "); cut != std::string::npos)
			what = what.substr(cut + 2);
		throw ParseError("syntax error: " + what, line, column);
	}
	if (!doc.is_object())
		bad("", "expected an object");
	for (const auto& [key, value] : doc.items())
		if (key != "algebra" && key != "representation")
			bad("/" + key, "unknown key");
	if (!doc.contains("algebra"))
		bad("/algebra", "missing");

	AlgebraSpec spec{algebra_at(doc["algebra"], "/algebra"), {}};
	spec.representation = doc.contains("representation")
	                          ? representation_at(doc["representation"], "/representation", spec.algebra)
	                          : presets::trivial(spec.algebra);

	if (validate) {
		ValidityReport problems = validate_lie(spec.algebra);
		if (problems.empty()) {
			try {
				problems = validate_rep(spec.algebra, spec.representation);
			} catch (const DimensionError& e) {
				bad("/representation", e.what());
			}
		}
		if (!problems.empty()) {
			std::string what;
			for (const auto& p : problems)
				what += (what.empty() ? "" : "; ") + describe(p, spec.algebra.names());
			throw ValidationError(what);
		}
	}
	return spec;
}

AlgebraSpec load_spec(const std::string& path, bool validate)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open " + path);
	std::ostringstream buffer;
	buffer << in.rdbuf();
	return parse_spec(buffer.str(), validate);
}

AlgebraSpec preset_spec(const std::string& algebra, const std::string& representation)
{
	AlgebraSpec spec{presets::algebra(algebra), {}};
	spec.representation = presets::representation(spec.algebra, representation);
	return spec;
}

} // namespace famalg
