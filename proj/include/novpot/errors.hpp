#pragma once

#include <stdexcept>
#include <string>

namespace novpot {

// Error taxonomy used across the library.  The CLI maps these onto exit
// codes: config_error -> 2, math_error (and children) -> 3,
// precision_error -> 4.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files, schema violations, unresolved cross-references.
struct config_error : error {
    using error::error;
};

// Domain errors raised by the algebra itself.
struct math_error : error {
    using error::error;
};

struct field_mismatch_error : math_error {
    using math_error::math_error;
};

struct division_by_zero_error : math_error {
    using math_error::math_error;
};

struct unsupported_shape_error : math_error {
    using math_error::math_error;
};

// Raised when a requested root lives outside the configured cyclotomic
// field.  suggested_order is the smallest order the caller should retry
// with, or 0 when no cyclotomic extension can help.
struct needs_field_extension_error : math_error {
    unsigned suggested_order;
    needs_field_extension_error(const std::string& what, unsigned suggested)
        : math_error(what), suggested_order(suggested) {}
};

struct dimension_error : math_error {
    using math_error::math_error;
};

struct invalid_fiber_error : math_error {
    using math_error::math_error;
};

struct non_balanced_fiber_error : math_error {
    using math_error::math_error;
};

struct inconsistency_error : math_error {
    using math_error::math_error;
};

// Unknown generator labels, missing pairing rows, undeclared functionals.
struct lattice_error : math_error {
    using math_error::math_error;
};

// A truncated computation could not certify its answer at the requested
// precision.  suggested_precision is a rendered rational ("p/q").
struct precision_error : error {
    std::string suggested_precision;
    precision_error(const std::string& what, std::string suggested)
        : error(what), suggested_precision(std::move(suggested)) {}
};

}  // namespace novpot
