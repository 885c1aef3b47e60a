#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derops {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values live in different algebra contexts.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// A name (variable, derivation, catalog entry) is not registered.
struct UnknownNameError : Error {
    using Error::Error;
};

/// Wrong number of arguments or factors for an operation's arity.
struct ArityError : Error {
    using Error::Error;
};

/// A configured cap (naive or DP) would be exceeded.
struct CapError : Error {
    using Error::Error;
};

/// The exhaustive tuple budget would be exceeded.
struct BudgetError : Error {
    using Error::Error;
};

/// Invalid input that is not a parse error (bad weights, duplicate names, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Syntax error in a polynomial literal; `offset` is the byte position.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

} // namespace derops
