#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pastrev {

// Syntax error with the byte offset where scanning stopped.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Raised when a check that theory guarantees cannot fail does fail;
// distinct from domain errors so callers can treat it as a bug signal.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pastrev
