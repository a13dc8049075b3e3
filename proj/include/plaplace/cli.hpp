#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plaplace::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kSolverError = 2,
    kVerificationFailed = 3,
};

/// Runs one command line (args excludes the program name). Data goes to
/// `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plaplace::cli
