#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixperm::cli {

enum ExitCode : int {
  kOk = 0,
  kDiscrepancy = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixperm::cli
