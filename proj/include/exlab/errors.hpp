#ifndef EXLAB_ERRORS_HPP
#define EXLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exlab {

// Bad arguments or malformed input (CLI exit code 1).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request exceeds the configured exhaustive-computation budget (CLI exit code 2).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal self-check failed; signals a bug, never a bad input (CLI exit code 3).
struct VerificationError : std::logic_error {
    explicit VerificationError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace exlab

#endif
