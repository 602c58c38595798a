#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace distk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

/// Runs the command line `args` (program name excluded). Reports and graphs go
/// to `out` unless an output file is given; diagnostics go to `err`.
/// Returns 0 on success, 2 when a verification found a mismatch, 1 on error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distk::cli
