#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ibham::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitRegime = 3;
inline constexpr int kExitTightnessRegime = 4;
inline constexpr int kExitNumeric = 5;

// Minimal positive gap the verify gate accepts; resolution floor of the
// constrained search, frozen once (see tests/fixtures.hpp for the pinned
// instance values).
inline constexpr double kVerifyGapThreshold = 1e-7;

// Formats a double with 12 significant digits, locale-independent.
std::string fmt12(double v);

// Parses argv (excluding the program name is fine either way; pass the full
// array) and runs one subcommand, writing results to out and diagnostics to
// err. Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace ibham::cli
