#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parityseq {

/// Exit status contract: 0 success, 1 verification or cross-check failure,
/// 2 usage or input error.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parityseq
