#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optic {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested optic kind is not reachable in the inclusion graph.
struct NoPathError : Error {
    using Error::Error;
};

// A document does not have the shape an optic demands (missing field,
// non-array under 'each', ...).
struct DocTypeError : Error {
    using Error::Error;
};

// A rebuild function received a list of the wrong length.
struct LengthMismatchError : Error {
    using Error::Error;
};

// 1-NN classification over an empty context.
struct EmptyContextError : Error {
    using Error::Error;
};

// Unexpected character while tokenizing a path expression.
struct LexError : Error {
    std::size_t offset;
    LexError(std::string msg, std::size_t at) : Error(std::move(msg)), offset(at) {}
};

// Malformed token sequence while parsing a path expression.
struct ParseError : Error {
    std::size_t token_index;
    ParseError(std::string msg, std::size_t at) : Error(std::move(msg)), token_index(at) {}
};

// Failure to read or decode an input document or dataset.
struct InputError : Error {
    using Error::Error;
};

} // namespace optic
