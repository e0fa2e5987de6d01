#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acm {

enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,  // validation errors, INST diagnostics, unsupported root claims
  kExitUsage = 2,     // bad flags, unreadable or unparseable input
  kExitFailure = 3,   // transformation or instantiation refused
};

/// Runs the `acm` command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace acm
