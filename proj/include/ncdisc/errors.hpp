#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdisc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Malformed input description (CLI exit code 2).
struct SchemaError : Error {
    using Error::Error;
};

/// A theorem hypothesis could not be certified (CLI exit code 3).
struct HypothesisError : Error {
    using Error::Error;
};

/// A degree or size cap was hit before the computation finished (CLI exit code 4).
struct CapExceeded : Error {
    using Error::Error;
};

/// Element is not in the span of the basis within the cap.
struct NoSolution : Error {
    using Error::Error;
};

/// Basis is not independent; what() carries a syzygy.
struct AmbiguousSolution : Error {
    using Error::Error;
};

struct NonConfluent : Error {
    using Error::Error;
};

}  // namespace ncdisc
