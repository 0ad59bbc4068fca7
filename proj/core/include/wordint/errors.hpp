#pragma once

#include <stdexcept>
#include <string>

namespace wordint {

// Raised on malformed word syntax or bad user input. CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation would exceed a configured size cap (e.g. matching
// enumeration beyond the k cap). CLI maps this to exit code 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal structural invariant fails (these are mathematical
// identities that must hold; a throw means a bug). CLI maps this to exit code 4.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wordint
