#pragma once

#include <ostream>

namespace qrc::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kRuntimeFailure = 1,
    kUsageError = 2,
    kConfigError = 3,
};

/// Entry point behind the `qrc` executable; writes human output to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrc::cli
