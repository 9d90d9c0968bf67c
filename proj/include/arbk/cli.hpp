#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace arbk::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kInvalidInput = 2,
    kIoFailure = 3,
    kDegenerateTarget = 4,
    kNonFinite = 5,
};

/**
 * Runs one `arbk` command line: generate | solve | compare | plot.
 * args excludes the program name. Machine-readable summaries go to `out`,
 * diagnostics (filtered by the LOG_LEVEL environment variable) and error
 * messages to `err`. Returns an ExitCode.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arbk::cli
