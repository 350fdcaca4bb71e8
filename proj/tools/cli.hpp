#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cochar::cli {

// Exit codes besides 0.
inline constexpr int kRouteMismatch = 1;
inline constexpr int kInvalidSpec = 2;
inline constexpr int kResidualFailure = 3;
inline constexpr int kIntegralityFailure = 4;

// Runs one command line (without the program name). Report goes to `out` or
// to the --out file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cochar::cli
