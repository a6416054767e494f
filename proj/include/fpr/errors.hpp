#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownGenerator : ParseError {
    using ParseError::ParseError;
};

struct EmptyRelator : Error {
    using Error::Error;
};

struct NonHyperbolicSignature : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct BadGaloisIndex : Error {
    using Error::Error;
};

struct NotPrimePower : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

// Todd-Coxeter ran out of cosets: index not determined (never "infinite").
struct EnumerationOverflow : Error {
    using Error::Error;
};

struct NoMatch : Error {
    using Error::Error;
};

}  // namespace fpr
