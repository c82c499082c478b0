#pragma once

#include <ostream>

namespace effcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

// Parses argv, runs one subcommand and returns the process exit code.
// Results go to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace effcone::cli
