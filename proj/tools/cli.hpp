#pragma once

#include <iosfwd>

namespace moonlight::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2 };

/// Command-line entry point; all diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moonlight::cli
