#pragma once

#include <stdexcept>
#include <string>

namespace famalg {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Operands live in incompatible spaces (generator count, matrix size).
struct DimensionError : Error {
	using Error::Error;
};

struct IndexError : Error {
	using Error::Error;
};

struct DivisionByZeroError : Error {
	using Error::Error;
};

struct SingularMatrixError : Error {
	using Error::Error;
};

/// Killing form is degenerate, so no Casimir element exists.
struct NotSemisimpleError : Error {
	using Error::Error;
};

struct ValidationError : Error {
	using Error::Error;
};

struct ParseError : Error {
	ParseError(const std::string& what, int line, int column)
	    : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
	      line(line), column(column)
	{
	}
	int line;
	int column;
};

struct UnknownSuiteError : Error {
	using Error::Error;
};

struct PrerequisiteError : Error {
	using Error::Error;
};

} // namespace famalg
