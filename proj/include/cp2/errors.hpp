#pragma once

#include <stdexcept>
#include <string>

namespace cp2 {

// Input text could not be read (bad syntax, wrong arity, non-integer field).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input violating a domain invariant; message names the
// offending record and the invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition of an operation was not met by the caller.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Request exceeds a hard resource budget (state-sum crossing limit, overflow).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Catalog data implies a lower bound above an upper bound.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cp2
