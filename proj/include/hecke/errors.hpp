#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Division by zero or an operation with no exact result.
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operands built over different Hecke fields (different p).
struct descriptor_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadratic-extension operands with incompatible radicands.
struct radicand_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative procedure ran past its step budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace hecke
