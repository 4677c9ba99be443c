#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "famalg/config.hpp"
#include "famalg/errors.hpp"
#include "famalg/expression.hpp"
#include "famalg/family.hpp"
#include "famalg/poisson.hpp"
#include "famalg/report.hpp"
#include "famalg/suites.hpp"

namespace py = pybind11;
using namespace famalg;

namespace {

/// A family plus the spec it came from; everything crosses the boundary as
/// expression strings or JSON text.
class PyFamily {
public:
	explicit PyFamily(AlgebraSpec spec)
	    : spec_(std::move(spec)), F_(std::make_unique<Family>(spec_.algebra, spec_.representation))
	{
	}

	const NameList& names() const { return F_->algebra().names(); }
	int d() const { return F_->d(); }

	std::string poisson(const std::string& a, const std::string& b) const
	{
		Expression x = parse_expression(a, names()), y = parse_expression(b, names());
		if (std::holds_alternative<SymPoly>(x) && std::holds_alternative<SymPoly>(y))
			return to_string(poisson_bracket(F_->algebra(), std::get<SymPoly>(x), std::get<SymPoly>(y)), names());
		return to_string(F_->nc_poisson(matrix(a), matrix(b)), names());
	}

	std::string star(const std::string& a, const std::string& b, std::optional<unsigned> order) const
	{
		Expression x = parse_expression(a, names()), y = parse_expression(b, names());
		if (std::holds_alternative<SymPoly>(x) && std::holds_alternative<SymPoly>(y)) {
			const SymPoly& p = std::get<SymPoly>(x);
			const SymPoly& q = std::get<SymPoly>(y);
			const Enveloping& U = F_->enveloping();
			return order ? to_string(U.star_coefficient(p, q, *order), names())
			             : to_string(U.star_product(p, q), names());
		}
		return order ? to_string(F_->star_coefficient(matrix(a), matrix(b), *order), names())
		             : to_string(F_->star_product(matrix(a), matrix(b)), names());
	}

	std::string nabla(const std::string& a) const { return to_string(F_->nabla(matrix(a)), names()); }
	std::string nabla_prime(const std::string& a) const { return to_string(F_->nabla_prime(matrix(a)), names()); }
	std::string c1(const std::string& a) const { return to_string(F_->chern_c1(matrix(a)), names()); }
	std::string fpbw(const std::string& a) const { return to_string(F_->fpbw(matrix(a)), names()); }

	bool is_invariant(const std::string& a) const { return F_->is_classical_invariant(matrix(a)); }
	bool is_quantum_invariant(const std::string& a) const { return F_->is_quantum_invariant(F_->fpbw(matrix(a))); }

	std::vector<std::string> invariants(int degree) const
	{
		std::vector<std::string> out;
		for (const auto& A : F_->invariant_basis(degree))
			out.push_back(to_string(A, names()));
		return out;
	}

	/// JSON text of the suite report.
	std::string suite(const std::string& name, int degree, std::uint64_t seed, std::size_t budget) const
	{
		SuiteRunner runner(*F_);
		if (SuiteRunner::needs_invariants(name))
			runner.set_invariant_basis(F_->invariant_basis(degree), degree);
		return suite_json(runner.run(name, {degree, seed, budget}), false).dump();
	}

	std::string spec_json_text() const { return spec_json(spec_).dump(); }

private:
	MatPoly matrix(const std::string& text) const { return parse_matrix(text, names(), F_->d()); }

	AlgebraSpec spec_;
	std::unique_ptr<Family> F_;
};

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Exact family algebra kernel";

	py::register_exception<Error>(m, "FamalgError", PyExc_RuntimeError);
	py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
	py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
	py::register_exception<UnknownSuiteError>(m, "UnknownSuiteError", PyExc_KeyError);

	py::class_<PyFamily>(m, "Family")
	    .def(py::init([](const std::string& algebra, const std::string& rep) {
		         return PyFamily(preset_spec(algebra, rep));
	         }),
	         py::arg("algebra") = "sl2", py::arg("rep") = "standard")
	    .def_static("from_spec", [](const std::string& text) { return PyFamily(parse_spec(text)); }, py::arg("text"))
	    .def_property_readonly("names", &PyFamily::names)
	    .def_property_readonly("d", &PyFamily::d)
	    .def("poisson", &PyFamily::poisson, py::arg("a"), py::arg("b"))
	    .def("star", &PyFamily::star, py::arg("a"), py::arg("b"), py::arg("order") = py::none())
	    .def("nabla", &PyFamily::nabla)
	    .def("nabla_prime", &PyFamily::nabla_prime)
	    .def("c1", &PyFamily::c1)
	    .def("fpbw", &PyFamily::fpbw)
	    .def("is_invariant", &PyFamily::is_invariant)
	    .def("is_quantum_invariant", &PyFamily::is_quantum_invariant)
	    .def("invariants", &PyFamily::invariants, py::arg("degree"))
	    .def("_suite", &PyFamily::suite, py::call_guard<py::gil_scoped_release>())
	    .def("_spec", &PyFamily::spec_json_text);

	m.def("suite_names", &SuiteRunner::suite_names);
}
