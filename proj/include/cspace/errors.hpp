#pragma once

#include <stdexcept>
#include <string>

namespace cspace {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input from the caller: unknown labels, malformed flags, syntax errors.
// The CLI maps these to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

// The inputs were well-formed but the request cannot be honored: invalid
// space, refused exhaustive work, impossible generation. Exit code 1.
struct DomainError : Error {
    using Error::Error;
};

// An operation would need more exhaustive work than the configured cap allows.
struct CapError : DomainError {
    using DomainError::DomainError;
};

// Formula (or other text) syntax error; `position` is a 1-based offset.
struct ParseError : UsageError {
    ParseError(const std::string& what, std::size_t position)
        : UsageError(what), position(position) {}
    std::size_t position;
};

}  // namespace cspace
