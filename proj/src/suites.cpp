#include "famalg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "famalg/errors.hpp"
#include "famalg/poisson.hpp"

namespace famalg {

bool SuiteReport::passed() const
{
	return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

std::size_t SuiteReport::tuples() const
{
	std::size_t total = 0;
	for (const auto& c : checks)
		total += c.tuples;
	return total;
}

unsigned worker_count()
{
	const char* env = std::getenv("FAMALG_WORKERS");
	if (env == nullptr || *env == '\0')
		return 1;
	char* end = nullptr;
	long v = std::strtol(env, &end, 10);
	if (end == env || *end != '\0' || v < 1)
		return 1;
	return static_cast<unsigned>(std::min<long>(v, 256));
}

std::vector<std::size_t> select_indices(std::size_t total, std::size_t budget, std::uint64_t seed,
                                        std::uint64_t stream)
{
	std::vector<std::size_t> out;
	if (budget == 0 || total <= budget) {
		out.resize(total);
		for (std::size_t i = 0; i < total; ++i)
			out[i] = i;
		return out;
	}
	// Floyd's algorithm: `budget` distinct draws without materializing the range.
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
	std::mt19937_64 rng(seq);
	std::set<std::size_t> chosen;
	for (std::size_t j = total - budget; j < total; ++j) {
		std::size_t r = static_cast<std::size_t>(rng() % (j + 1));
		chosen.insert(chosen.contains(r) ? j : r);
	}
	out.assign(chosen.begin(), chosen.end());
	return out;
}

std::vector<QMatrix> sample_basis_changes(int n, int count, std::uint64_t seed)
{
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
	std::mt19937_64 rng(seq);
	std::vector<QMatrix> out;
	while (static_cast<int>(out.size()) < count) {
		QMatrix T(n, n);
		for (int r = 0; r < n; ++r)
			for (int c = 0; c < n; ++c)
				T(r, c) = Rational(static_cast<long>(rng() % 5) - 2);
		if (!determinant(T).is_zero() && T != QMatrix::identity(n))
			out.push_back(std::move(T));
	}
	return out;
}

namespace {

struct Outcome {
	bool zero = true;
	std::string value;
};

using Probe = std::function<Outcome(std::span<const MatPoly>)>;
using Slots = std::vector<const std::vector<MatPoly>*>;

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn)
{
	const std::size_t workers = std::min<std::size_t>(worker_count(), count);
	if (workers <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			fn(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	std::vector<std::thread> pool;
	for (std::size_t w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			try {
				for (std::size_t i = next++; i < count; i = next++)
					fn(i);
			} catch (...) {
				std::lock_guard lock(failure_mutex);
				if (!failure)
					failure = std::current_exception();
				next = count;
			}
		});
	for (auto& t : pool)
		t.join();
	if (failure)
		std::rethrow_exception(failure);
}

Probe probe(const Cochain& c, const NameList& names)
{
	return [c, &names](std::span<const MatPoly> args) {
		MatPoly r = c(args);
		if (r.is_zero())
			return Outcome{};
		return Outcome{false, to_string(r, names)};
	};
}

std::vector<MatPoly> as_scalars(const Family& S, const std::vector<SymPoly>& polys)
{
	std::vector<MatPoly> out;
	for (const auto& p : polys)
		out.push_back(S.scalar(p));
	return out;
}

/// Collects checks for one report, numbering them so each samples its own
/// stream.
class Builder {
public:
	Builder(SuiteReport& report, const SuiteOptions& options, const NameList& names)
	    : report_(report), options_(options), names_(names)
	{
	}

	void check(std::string identity, std::string domain, const Slots& slots, const Probe& p,
	           Expect expect = Expect::zero)
	{
		CheckResult result;
		result.identity = std::move(identity);
		result.domain = std::move(domain);
		result.expect = expect;

		std::size_t total = 1;
		for (const auto* s : slots) {
			if (!s->empty() && total > std::numeric_limits<std::size_t>::max() / s->size())
				throw DimensionError("tuple set too large to index");
			total *= s->size();
		}
		result.candidates = total;
		const auto chosen = select_indices(total, options_.budget, options_.seed, stream_++);
		result.tuples = chosen.size();

		std::vector<std::optional<Residual>> found(chosen.size());
		parallel_for(chosen.size(), [&](std::size_t at) {
			std::vector<MatPoly> args(slots.size());
			std::size_t rest = chosen[at];
			for (std::size_t s = slots.size(); s-- > 0;) {
				const auto& base = *slots[s];
				args[s] = base[rest % base.size()];
				rest /= base.size();
			}
			Outcome o = p(args);
			if (o.zero)
				return;
			Residual r;
			for (const auto& a : args)
				r.inputs.push_back(to_string(a, names_));
			r.value = std::move(o.value);
			found[at] = std::move(r);
		});
		for (auto& r : found) {
			if (!r)
				continue;
			++result.nonzero;
			if (result.residuals.size() < residual_limit)
				result.residuals.push_back(std::move(*r));
		}
		report_.checks.push_back(std::move(result));
	}

	void note(std::string text) { report_.notes.push_back(std::move(text)); }

private:
	SuiteReport& report_;
	const SuiteOptions& options_;
	const NameList& names_;
	std::uint64_t stream_ = 0;
};

std::string bounded(const std::string& what, int arity, int degree)
{
	return what + "^" + std::to_string(arity) + ", deg <= " + std::to_string(degree);
}

const std::vector<std::string> kSuites = {
    "dP_zero",          "PP_plus_dPhi",     "lemma_phi_scalar",  "main_theorem",  "nabla_diff_c1",
    "nabla_basis_independence", "mc_order2", "order1_cocycle",  "infinitesimal_trivial",
    "d_is_bracket_mu",  "mu_square_zero",   "d_squared_zero",    "poisson_vanish_Ig", "pbw_center",
    "fpbw_image",
};

const std::set<std::string> kNeedInvariants = {"main_theorem", "nabla_diff_c1", "infinitesimal_trivial",
                                               "fpbw_image"};

} // namespace

struct SuiteRunner::Impl {
	const Family& F;
	Family S;
	std::optional<std::vector<MatPoly>> invariants;
	int invariant_degree = -1;

	explicit Impl(const Family& family)
	    : F(family), S(family.algebra(), presets::trivial(family.algebra()))
	{
	}

	[[nodiscard]] std::vector<MatPoly> invariants_up_to(int D) const
	{
		std::vector<MatPoly> out;
		for (const auto& a : *invariants)
			if (degree(a) <= D)
				out.push_back(a);
		return out;
	}

	void run(const std::string& name, Builder& b, const SuiteOptions& o) const;
};

SuiteRunner::SuiteRunner(const Family& F) : impl_(std::make_unique<Impl>(F)) {}

SuiteRunner::~SuiteRunner() = default;

void SuiteRunner::set_invariant_basis(std::vector<MatPoly> basis, int degree)
{
	impl_->invariants = std::move(basis);
	impl_->invariant_degree = degree;
}

bool SuiteRunner::has_invariant_basis(int degree) const
{
	return impl_->invariants.has_value() && impl_->invariant_degree >= degree;
}

const std::vector<std::string>& SuiteRunner::suite_names() { return kSuites; }

bool SuiteRunner::needs_invariants(const std::string& name) { return kNeedInvariants.contains(name); }

SuiteReport SuiteRunner::run(const std::string& name, const SuiteOptions& options) const
{
	if (std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end())
		throw UnknownSuiteError("unknown suite '" + name + "'");
	if (options.degree < 0)
		throw DimensionError("degree bound must be nonnegative");
	if (needs_invariants(name) && !has_invariant_basis(options.degree))
		throw PrerequisiteError("suite " + name + " needs the invariant basis up to degree " +
		                        std::to_string(options.degree) + "; compute invariants first");

	SuiteReport report;
	report.suite = name;
	report.algebra = impl_->F.algebra().label();
	report.representation = impl_->F.representation().label;
	report.degree = options.degree;
	report.seed = options.seed;
	report.budget = options.budget;

	const auto start = std::chrono::steady_clock::now();
	Builder b(report, options, impl_->F.algebra().names());
	impl_->run(name, b, options);
	report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return report;
}

std::vector<SuiteReport> SuiteRunner::run_all(const SuiteOptions& options) const
{
	std::vector<SuiteReport> out;
	for (const auto& name : kSuites)
		out.push_back(run(name, options));
	return out;
}

void SuiteRunner::Impl::run(const std::string& name, Builder& b, const SuiteOptions& o) const
{
	const int D = o.degree;
	const NameList& names = F.algebra().names();
	const LieAlgebra& L = F.algebra();
	const Cochain mu = atoms::mu(F);
	const Cochain P = atoms::poisson(F);
	const Cochain smu = atoms::mu(S);
	const Cochain sP = atoms::poisson(S);

	auto span = F.spanning_set(D);
	auto sspan = S.spanning_set(D);
	const std::string span3 = bounded("spanning", 3, D);
	const std::string sspan3 = bounded("monomials", 3, D);

	if (name == "dP_zero") {
		b.check("dH(P) = 0", span3, {&span, &span, &span}, probe(d_hochschild(P, mu), names));
	} else if (name == "PP_plus_dPhi") {
		b.check("P o P + dH(Phi) = 0", span3, {&span, &span, &span},
		        probe(circ(P, P) + d_hochschild(atoms::phi(F), mu), names));
	} else if (name == "lemma_phi_scalar") {
		b.check("{a,{b,c}} - {{a,b},c} + dH(phi)(a,b,c) = 0", sspan3, {&sspan, &sspan, &sspan},
		        probe(circ(sP, sP) + d_hochschild(atoms::phi(S), smu), names));
	} else if (name == "main_theorem") {
		auto inv = invariants_up_to(D);
		const auto dom = bounded("invariant", 2, D);
		const Cochain dn = d_hochschild(atoms::nabla(F), mu);
		const Cochain dnp = d_hochschild(atoms::nabla_prime(F), mu);
		b.check("P + dH(nabla) = 0", dom, {&inv, &inv}, probe(P + dn, names));
		b.check("P + dH(nabla') = 0", dom, {&inv, &inv}, probe(P + dnp, names));
		b.check("P - dH(nabla) = 0", dom, {&inv, &inv}, probe(P - dn, names), Expect::record);
		b.check("P - dH(nabla') = 0", dom, {&inv, &inv}, probe(P - dnp, names), Expect::record);
		std::vector<MatPoly> gens;
		for (int i = 0; i < F.n(); ++i)
			gens.push_back(F.scalar(L.generator(i)));
		b.check("P + dH(nabla) = 0", "control: (Id*X_i, Id*X_j), not invariant", {&gens, &gens},
		        probe(P + dn, names), Expect::record);
	} else if (name == "nabla_diff_c1") {
		auto inv = invariants_up_to(D);
		const auto dom = bounded("invariant", 1, D);
		b.check("nabla - nabla' + c1 = 0", dom, {&inv},
		        probe(atoms::nabla(F) - atoms::nabla_prime(F) + atoms::c1(F), names));
		const std::pair<const char*, Cochain> images[] = {
		    {"nabla", atoms::nabla(F)}, {"nabla'", atoms::nabla_prime(F)}, {"c1", atoms::c1(F)}};
		for (const auto& [label, op] : images)
			for (int i = 0; i < F.n(); ++i) {
				Cochain act(1, "", [this, i, op](Cochain::Args a) { return F.classical_action(i, op(a)); });
				b.check("L_" + names[static_cast<std::size_t>(i)] + "(" + label + "(A)) = 0", dom, {&inv},
				        probe(act, names));
			}
	} else if (name == "nabla_basis_independence") {
		const auto dom = bounded("spanning", 1, D);
		for (const auto& T : sample_basis_changes(F.n(), 3, o.seed)) {
			auto moved = std::make_shared<Family>(change_basis(F, BasisChange{T}));
			const BasisChange to{T};
			const BasisChange back{inverse(T)};
			b.note("T = " + T.to_string());
			Cochain diff(1, "", [this, moved, to, back](Cochain::Args a) {
				return transport(moved->nabla(transport(a[0], to)), back) - F.nabla(a[0]);
			});
			Cochain diffp(1, "", [this, moved, to, back](Cochain::Args a) {
				return transport(moved->nabla_prime(transport(a[0], to)), back) - F.nabla_prime(a[0]);
			});
			b.check("T^-1 nabla~(T A) = nabla(A), T = " + T.to_string(), dom, {&span}, probe(diff, names));
			b.check("T^-1 nabla'~(T A) = nabla'(A), T = " + T.to_string(), dom, {&span}, probe(diffp, names));
		}
	} else if (name == "mc_order2") {
		const Cochain sm1 = atoms::star(S, 1);
		const Cochain m1 = atoms::star(F, 1);
		b.check("dH(m2) + m1 o m1 = 0 (scalar)", sspan3, {&sspan, &sspan, &sspan},
		        probe(d_hochschild(atoms::star(S, 2), smu) + circ(sm1, sm1), names));
		b.check("dH(m2) + m1 o m1 = 0 (matrix)", span3, {&span, &span, &span},
		        probe(d_hochschild(atoms::star(F, 2), mu) + circ(m1, m1), names));
	} else if (name == "order1_cocycle") {
		b.check("dH(m1) = 0 (scalar)", sspan3, {&sspan, &sspan, &sspan},
		        probe(d_hochschild(atoms::star(S, 1), smu), names));
		b.check("dH(m1) = 0 (matrix)", span3, {&span, &span, &span},
		        probe(d_hochschild(atoms::star(F, 1), mu), names));
	} else if (name == "infinitesimal_trivial") {
		auto inv = invariants_up_to(D);
		const Cochain m1 = atoms::star(F, 1);
		b.check("m1 - 1/2*P = 0", bounded("spanning", 2, D), {&span, &span},
		        probe(m1 - Rational(1, 2) * P, names));
		b.check("m1 + dH(1/2*nabla) = 0", bounded("invariant", 2, D), {&inv, &inv},
		        probe(m1 + d_hochschild(Rational(1, 2) * atoms::nabla(F), mu), names));
	} else if (name == "d_is_bracket_mu") {
		const Cochain fs[] = {atoms::identity(F), P,           atoms::nabla(F),   atoms::nabla_prime(F),
		                      atoms::c1(F),       atoms::phi(F), atoms::star(F, 1), atoms::star(F, 2)};
		for (const auto& f : fs) {
			Slots slots(static_cast<std::size_t>(f.arity() + 1), &span);
			b.check("dH(" + f.label() + ") - [mu, " + f.label() + "]_G = 0", bounded("spanning", f.arity() + 1, D),
			        slots, probe(d_hochschild(f, mu) - gerstenhaber_bracket(mu, f), names));
		}
	} else if (name == "mu_square_zero") {
		b.check("[mu, mu]_G = 0", span3, {&span, &span, &span}, probe(gerstenhaber_bracket(mu, mu), names));
		b.check("mu o mu = 0", span3, {&span, &span, &span}, probe(circ(mu, mu), names));
	} else if (name == "d_squared_zero") {
		const Cochain fs[] = {atoms::identity(F), P, atoms::nabla(F), atoms::c1(F), atoms::phi(F)};
		for (const auto& f : fs) {
			Slots slots(static_cast<std::size_t>(f.arity() + 2), &span);
			b.check("dH(dH(" + f.label() + ")) = 0", bounded("spanning", f.arity() + 2, D), slots,
			        probe(d_hochschild(d_hochschild(f, mu), mu), names));
		}
	} else if (name == "poisson_vanish_Ig") {
		auto ig = as_scalars(S, invariant_polynomials(L, D));
		b.note("dim I(g) up to degree " + std::to_string(D) + ": " + std::to_string(ig.size()));
		const auto dom = bounded("I(g)", 2, D);
		b.check("{a, b} = 0", dom, {&ig, &ig}, probe(sP, names));
		b.check("m1(a, b) = 0", dom, {&ig, &ig}, probe(atoms::star(S, 1), names));
		for (int i = 0; i < F.n(); ++i) {
			Cochain act(1, "", [this, i](Cochain::Args a) { return S.classical_action(i, a[0]); });
			b.check("{" + names[static_cast<std::size_t>(i)] + ", a} = 0", bounded("I(g)", 1, D), {&ig},
			        probe(act, names));
		}
	} else if (name == "pbw_center") {
		auto ig = as_scalars(S, invariant_polynomials(L, D));
		const Enveloping& U = S.enveloping();
		for (int i = 0; i < F.n(); ++i) {
			Probe central = [this, i, &U, &names](std::span<const MatPoly> a) {
				UEElement c = U.commutator(U.pbw_symmetrize(a[0](0, 0)), U.generator(i));
				if (c.is_zero())
					return Outcome{};
				return Outcome{false, to_string(c, names)};
			};
			b.check("[I(a), " + names[static_cast<std::size_t>(i)] + "] = 0", bounded("I(g)", 1, D), {&ig},
			        central);
		}
	} else if (name == "fpbw_image") {
		auto inv = invariants_up_to(D);
		for (int i = 0; i < F.n(); ++i) {
			Probe quantum = [this, i, &names](std::span<const MatPoly> a) {
				MatUE r = F.quantum_action(i, F.fpbw(a[0]));
				if (r.is_zero())
					return Outcome{};
				return Outcome{false, to_string(r, names)};
			};
			b.check("Q_" + names[static_cast<std::size_t>(i)] + "(F_PBW(A)) = 0", bounded("invariant", 1, D), {&inv},
			        quantum);
		}
	}
}

} // namespace famalg
