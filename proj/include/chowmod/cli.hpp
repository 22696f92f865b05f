#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowmod {

enum ExitCode { kExitOk = 0, kExitVerificationFailure = 1, kExitInputError = 2 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, or to the --out path when given; input errors are reported
/// as {"error": {...}} on `out` with exit code 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace chowmod
