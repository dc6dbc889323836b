#ifndef PMP_ERRORS_HPP
#define PMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmp {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit status 1; usage problems are reported separately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Invalid or out-of-range degree arguments (d does not divide deg F, ...).
struct DegreeError : Error {
    using Error::Error;
};

// Mixed endpoint kinds, equal endpoints, denominator mismatches.
struct EndpointError : Error {
    using Error::Error;
};

// Inversion of zero or of a zero divisor modulo a reducible min_poly.
struct NonInvertibleError : Error {
    using Error::Error;
};

// Inputs that violate a theorem hypothesis (GCD conditions, parity, ...).
struct HypothesisViolation : Error {
    using Error::Error;
};

// Inputs inside a theorem's hypotheses for which no classification was
// found; signals inexact or inconsistent data.
struct ClassificationFailure : Error {
    using Error::Error;
};

// A conclusion guaranteed by a theorem failed to materialize; indicates
// caller data outside the hypotheses rather than a recoverable condition.
struct ConsistencyError : Error {
    using Error::Error;
};

// certify_reducible failure; the message names the failed condition.
struct NotReducible : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

}  // namespace pmp

#endif
