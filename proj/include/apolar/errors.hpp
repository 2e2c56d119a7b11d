#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Malformed input: bad rational/polynomial/JSON syntax, schema violations.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical precondition or failed certificate.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace apolar
