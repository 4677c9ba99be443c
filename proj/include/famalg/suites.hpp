#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "famalg/cochain.hpp"
#include "famalg/family.hpp"

namespace famalg {

struct SuiteOptions {
	int degree = 3;
	std::uint64_t seed = 0;
	/// Largest tuple set checked exhaustively; bigger sets are sampled down to
	/// this many tuples. 0 means always enumerate everything.
	std::size_t budget = 2000;
};

enum class Expect {
	/// Every residual must vanish.
	zero,
	/// Outcome is reported but does not decide the suite.
	record,
};

struct Residual {
	std::vector<std::string> inputs;
	std::string value;
};

struct CheckResult {
	std::string identity;
	/// What the tuples range over, e.g. "spanning^3 (deg <= 2)".
	std::string domain;
	Expect expect = Expect::zero;
	std::size_t candidates = 0;
	std::size_t tuples = 0;
	std::size_t nonzero = 0;
	/// The first few nonzero residuals, in tuple order.
	std::vector<Residual> residuals;

	[[nodiscard]] bool holds() const { return nonzero == 0; }
	[[nodiscard]] bool ok() const { return expect == Expect::record || holds(); }
};

struct SuiteReport {
	std::string suite;
	std::string algebra;
	std::string representation;
	int degree = 0;
	std::uint64_t seed = 0;
	std::size_t budget = 0;
	std::vector<CheckResult> checks;
	std::vector<std::string> notes;
	double seconds = 0;

	[[nodiscard]] bool passed() const;
	[[nodiscard]] std::size_t tuples() const;
};

/// How many nonzero residuals a check keeps verbatim.
inline constexpr std::size_t residual_limit = 20;

/// Runs the named identity suites against one family. The scalar-level
/// suites use the same algebra with the trivial 1-dimensional representation.
class SuiteRunner {
public:
	explicit SuiteRunner(const Family& F);
	~SuiteRunner();

	/// Suites that evaluate on invariant elements need this first.
	void set_invariant_basis(std::vector<MatPoly> basis, int degree);
	[[nodiscard]] bool has_invariant_basis(int degree) const;

	/// Throws UnknownSuiteError or PrerequisiteError.
	[[nodiscard]] SuiteReport run(const std::string& name, const SuiteOptions& options) const;
	[[nodiscard]] std::vector<SuiteReport> run_all(const SuiteOptions& options) const;

	static const std::vector<std::string>& suite_names();
	static bool needs_invariants(const std::string& name);

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/// Worker count from FAMALG_WORKERS, at least 1.
unsigned worker_count();

/// Up to `budget` distinct indices below `total`, ascending; all of them when
/// budget is 0 or total <= budget. Deterministic in (seed, stream).
std::vector<std::size_t> select_indices(std::size_t total, std::size_t budget, std::uint64_t seed,
                                        std::uint64_t stream);

/// Seeded invertible matrices with small integer entries.
std::vector<QMatrix> sample_basis_changes(int n, int count, std::uint64_t seed);

} // namespace famalg
