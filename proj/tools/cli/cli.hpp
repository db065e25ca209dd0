#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trirec::cli {

/// Exit codes of the trirec tool.
enum ExitCode : int {
    kSuccess = 0,
    kIdentityFailure = 1,  // a non-diagnostic identity produced a counterexample
    kUsageError = 2,       // bad flags, malformed input, or an internal cross-check mismatch
};

/// Runs one invocation. `args` excludes the program name. Output is written
/// to `out` only once the command has fully succeeded; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trirec::cli
