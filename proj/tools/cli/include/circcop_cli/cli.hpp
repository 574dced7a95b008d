#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circcop::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kNegative = 3 };

/// Environment variable naming the directory for outputs written without -o.
inline constexpr const char* kOutputDirEnv = "CIRCCOP_OUTPUT_DIR";

/// Runs the `circcop` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circcop::cli
