#pragma once

#include <ostream>

namespace hecke::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_not_verified = 2;
inline constexpr int exit_budget = 3;

/// Runs one heckerpf invocation; results go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hecke::cli
