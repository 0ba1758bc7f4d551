#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bollobas::cli {

/// Exit codes of bollobas-lab.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kInvalidInput = 3,
    kCapExceeded = 4,
    kHypothesisFailed = 5,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics and --pretty tables to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bollobas::cli
