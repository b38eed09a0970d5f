#pragma once

namespace extremal::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

/// Parses argv and dispatches to the chosen subcommand. Returns the exit code.
int run(int argc, char** argv);

}  // namespace extremal::cli
