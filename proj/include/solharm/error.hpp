#ifndef SOLHARM_ERROR_HPP
#define SOLHARM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace solharm {

// Base for all library failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent user configuration (CLI exit code 2).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// An operation ran out of the finite window it was given (tree depth,
// solenoid budget, fiber index range).
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

}  // namespace solharm

#endif
