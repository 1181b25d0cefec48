#pragma once

#include <stdexcept>
#include <string>

namespace tq {

// Bad inputs (parameters, parse failures, malformed states). The CLI maps
// these to exit code 2.
struct SpecParseError : std::invalid_argument {
    SpecParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), pos(position) {}
    std::size_t pos;
};

struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A fidelity below the thermal-Werner threshold has no mixture representation.
struct NotRepresentableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failures (lost invariants, non-converged solves). Exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Null space of the generator has a dimension the regime does not predict.
struct DegeneracyError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace tq
