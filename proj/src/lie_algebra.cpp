#include "famalg/lie_algebra.hpp"

#include <map>
#include <regex>
#include <tuple>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

std::size_t tensor_index(int n, int i, int j, int k)
{
	return static_cast<std::size_t>((i * n + j) * n + k);
}

} // namespace

LieAlgebra::LieAlgebra(std::string label, NameList names, std::vector<Rational> constants)
    : label_(std::move(label)), n_(static_cast<int>(names.size())), names_(std::move(names)),
      constants_(std::move(constants))
{
	if (n_ > kMaxGenerators)
		throw DimensionError("at most " + std::to_string(kMaxGenerators) + " generators supported");
	if (constants_.size() != static_cast<std::size_t>(n_ * n_ * n_))
		throw DimensionError("structure constant tensor must have n^3 entries");
	bracket_forms_.reserve(static_cast<std::size_t>(n_ * n_));
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j) {
			SymPoly form(n_);
			for (int k = 0; k < n_; ++k)
				form.add_term(Monomial::generator(k), c(i, j, k));
			bracket_forms_.push_back(std::move(form));
		}
}

LieAlgebra LieAlgebra::from_brackets(std::string label, NameList names,
                                     const std::vector<BracketEntry>& brackets)
{
	const int n = static_cast<int>(names.size());
	std::map<std::tuple<int, int, int>, Rational> given;
	for (const auto& b : brackets) {
		if (b.i < 0 || b.i >= n || b.j < 0 || b.j >= n || b.k < 0 || b.k >= n)
			throw IndexError("bracket index out of range 1.." + std::to_string(n));
		auto key = std::make_tuple(b.i, b.j, b.k);
		if (given.contains(key))
			throw ValidationError("bracket (" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) +
			                      "," + std::to_string(b.k + 1) + ") given twice");
		given.emplace(key, b.value);
	}
	std::vector<Rational> constants(static_cast<std::size_t>(n * n * n), Rational(0));
	for (const auto& [key, value] : given) {
		auto [i, j, k] = key;
		auto partner = given.find(std::make_tuple(j, i, k));
		Rational expected = partner == given.end() ? -value : partner->second;
		if (!(expected == -value))
			throw ValidationError("antisymmetry violation at (" + std::to_string(i + 1) + "," +
			                      std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
		constants[tensor_index(n, i, j, k)] = value;
		constants[tensor_index(n, j, i, k)] = -value;
	}
	return LieAlgebra(std::move(label), std::move(names), std::move(constants));
}

int LieAlgebra::index_of(const std::string& name) const
{
	for (int i = 0; i < n_; ++i)
		if (names_[static_cast<std::size_t>(i)] == name)
			return i;
	return -1;
}

QMatrix LieAlgebra::ad(int i) const
{
	QMatrix m(n_, n_);
	for (int j = 0; j < n_; ++j)
		for (int k = 0; k < n_; ++k)
			m(k, j) = c(i, j, k);
	return m;
}

Rational LieAlgebra::ad_trace(int i) const
{
	Rational tr(0);
	for (int j = 0; j < n_; ++j)
		tr += c(i, j, j);
	return tr;
}

ValidityReport validate_lie(const LieAlgebra& L)
{
	const int n = L.dimension();
	ValidityReport report;
	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j)
			for (int k = 0; k < n; ++k) {
				Rational s = L.c(i, j, k) + L.c(j, i, k);
				if (!s.is_zero())
					report.push_back({"antisymmetry", {i + 1, j + 1, k + 1},
					                  "c^k_ij + c^k_ji = " + s.to_string()});
			}
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = j + 1; k < n; ++k)
				for (int l = 0; l < n; ++l) {
					Rational s(0);
					for (int m = 0; m < n; ++m)
						s += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) +
						     L.c(k, i, m) * L.c(m, j, l);
					if (!s.is_zero())
						report.push_back({"jacobi", {i + 1, j + 1, k + 1, l + 1}, "Jacobiator = " + s.to_string()});
				}
	return report;
}

ValidityReport validate_rep(const LieAlgebra& L, const Representation& R)
{
	const int n = L.dimension();
	if (static_cast<int>(R.tau.size()) != n)
		throw DimensionError("representation has " + std::to_string(R.tau.size()) + " matrices for " +
		                     std::to_string(n) + " generators");
	for (const auto& m : R.tau)
		if (m.rows() != R.d || m.cols() != R.d)
			throw DimensionError("representation matrix is not " + std::to_string(R.d) + "x" +
			                     std::to_string(R.d));
	ValidityReport report;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			QMatrix lhs = commutator(R.tau[static_cast<std::size_t>(i)], R.tau[static_cast<std::size_t>(j)]);
			for (int k = 0; k < n; ++k)
				if (!L.c(i, j, k).is_zero())
					lhs -= L.c(i, j, k) * R.tau[static_cast<std::size_t>(k)];
			if (!lhs.is_zero())
				report.push_back({"representation", {i + 1, j + 1}, "residual " + lhs.to_string()});
		}
	return report;
}

std::string describe(const Violation& v, const NameList& names)
{
	std::string idx;
	for (std::size_t a = 0; a < v.indices.size(); ++a) {
		if (a > 0)
			idx += ",";
		int i = v.indices[a];
		if (v.kind == "representation" && i >= 1 && i <= static_cast<int>(names.size()))
			idx += names[static_cast<std::size_t>(i - 1)];
		else
			idx += std::to_string(i);
	}
	return v.kind + " violation at (" + idx + "): " + v.detail;
}

QMatrix killing_form(const LieAlgebra& L)
{
	const int n = L.dimension();
	QMatrix B(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			Rational s(0);
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l)
					s += L.c(i, k, l) * L.c(j, l, k);
			B(i, j) = s;
		}
	return B;
}

SymPoly casimir(const LieAlgebra& L)
{
	QMatrix B = killing_form(L);
	QMatrix Binv;
	try {
		Binv = inverse(B);
	} catch (const SingularMatrixError&) {
		throw NotSemisimpleError("Killing form of " + L.label() + " is degenerate");
	}
	const int n = L.dimension();
	SymPoly cas(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			if (Binv(i, j).is_zero())
				continue;
			Monomial m = Monomial::generator(i) * Monomial::generator(j);
			cas.add_term(m, Binv(i, j));
		}
	return cas;
}

LieAlgebra change_basis(const LieAlgebra& L, const BasisChange& change)
{
	const int n = L.dimension();
	const QMatrix& T = change.T;
	if (T.rows() != n || T.cols() != n)
		throw DimensionError("basis change must be " + std::to_string(n) + "x" + std::to_string(n));
	QMatrix Tinv = inverse(T);
	std::vector<Rational> constants(static_cast<std::size_t>(n * n * n), Rational(0));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			// [X~_i, X~_j] expanded in the old basis.
			std::vector<Rational> old(static_cast<std::size_t>(n), Rational(0));
			for (int a = 0; a < n; ++a) {
				if (T(a, i).is_zero())
					continue;
				for (int b = 0; b < n; ++b) {
					if (T(b, j).is_zero())
						continue;
					Rational w = T(a, i) * T(b, j);
					for (int m = 0; m < n; ++m)
						if (!L.c(a, b, m).is_zero())
							old[static_cast<std::size_t>(m)] += w * L.c(a, b, m);
				}
			}
			for (int k = 0; k < n; ++k) {
				Rational s(0);
				for (int m = 0; m < n; ++m)
					s += Tinv(k, m) * old[static_cast<std::size_t>(m)];
				constants[tensor_index(n, i, j, k)] = s;
			}
		}
	return LieAlgebra(L.label() + "~", L.names(), std::move(constants));
}

SymPoly transport(const SymPoly& a, const BasisChange& change)
{
	const int n = a.generator_count();
	if (change.T.rows() != n || change.T.cols() != n)
		throw DimensionError("basis change does not match generator count");
	QMatrix Tinv = inverse(change.T);
	// X_k = sum_j Tinv(j, k) X~_j
	std::vector<SymPoly> image;
	for (int k = 0; k < n; ++k) {
		SymPoly l(n);
		for (int j = 0; j < n; ++j)
			l.add_term(Monomial::generator(j), Tinv(j, k));
		image.push_back(std::move(l));
	}
	SymPoly out(n);
	for (const auto& [m, c] : a.terms()) {
		SymPoly term = SymPoly::constant(n, c);
		for (int k = 0; k < n; ++k)
			if (m[k] > 0)
				term = term * image[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(m[k]));
		out += term;
	}
	return out;
}

Representation transport(const Representation& R, const BasisChange& change)
{
	const int n = static_cast<int>(R.tau.size());
	if (change.T.rows() != n || change.T.cols() != n)
		throw DimensionError("basis change does not match representation");
	inverse(change.T); // singular changes are rejected here too
	Representation out{R.label, R.d, {}};
	for (int j = 0; j < n; ++j) {
		QMatrix m(R.d, R.d);
		for (int k = 0; k < n; ++k)
			if (!change.T(k, j).is_zero())
				m += change.T(k, j) * R.tau[static_cast<std::size_t>(k)];
		out.tau.push_back(std::move(m));
	}
	return out;
}

namespace presets {

LieAlgebra sl2()
{
	// e = 0, f = 1, h = 2
	return LieAlgebra::from_brackets("sl2", {"e", "f", "h"},
	                                 {{0, 1, 2, Rational(1)}, {2, 0, 0, Rational(2)}, {2, 1, 1, Rational(-2)}});
}

LieAlgebra heisenberg3()
{
	return LieAlgebra::from_brackets("heisenberg3", {"p", "q", "z"}, {{0, 1, 2, Rational(1)}});
}

LieAlgebra affine2()
{
	return LieAlgebra::from_brackets("affine2", {"a", "b"}, {{0, 1, 1, Rational(1)}});
}

LieAlgebra abelian(int n)
{
	if (n < 1 || n > kMaxGenerators)
		throw DimensionError("abelian(n) needs 1 <= n <= " + std::to_string(kMaxGenerators));
	NameList names;
	for (int i = 1; i <= n; ++i)
		names.push_back("x" + std::to_string(i));
	return LieAlgebra::from_brackets("abelian(" + std::to_string(n) + ")", std::move(names), {});
}

Representation trivial(const LieAlgebra& L)
{
	return {"trivial", 1, std::vector<QMatrix>(static_cast<std::size_t>(L.dimension()), QMatrix(1, 1))};
}

Representation adjoint(const LieAlgebra& L)
{
	Representation R{"adjoint", L.dimension(), {}};
	for (int i = 0; i < L.dimension(); ++i)
		R.tau.push_back(L.ad(i));
	return R;
}

Representation standard(const LieAlgebra& L)
{
	if (L.label() == "sl2")
		return {"standard", 2, {QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}, QMatrix{{1, 0}, {0, -1}}}};
	if (L.label() == "heisenberg3")
		return {"standard",
		        3,
		        {QMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, QMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
		         QMatrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}};
	if (L.label() == "affine2")
		return {"standard", 2, {QMatrix{{1, 0}, {0, 0}}, QMatrix{{0, 1}, {0, 0}}}};
	throw ValidationError("no standard representation preset for " + L.label());
}

LieAlgebra algebra(const std::string& name)
{
	if (name == "sl2")
		return sl2();
	if (name == "heisenberg3")
		return heisenberg3();
	if (name == "affine2")
		return affine2();
	static const std::regex abelian_re(R"(abelian\((\d+)\))");
	std::smatch match;
	if (std::regex_match(name, match, abelian_re))
		return abelian(std::stoi(match[1].str()));
	throw ValidationError("unknown algebra preset '" + name + "'");
}

Representation representation(const LieAlgebra& L, const std::string& name)
{
	if (name == "trivial")
		return trivial(L);
	if (name == "adjoint")
		return adjoint(L);
	if (name == "standard")
		return standard(L);
	throw ValidationError("unknown representation preset '" + name + "'");
}

} // namespace presets

} // namespace famalg
