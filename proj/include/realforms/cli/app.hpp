#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace realforms {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitSearchExhausted = 3,
  kExitPrecisionExhausted = 4,
  kExitVerificationFailed = 5,
};

/// Runs `realforms <construct|verify|report> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace realforms
