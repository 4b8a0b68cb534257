#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bracekit {

struct CommandResult {
  std::string status;  // "ok" or "error"
  int exit_code = 0;   // 0 ok, 1 domain error, 2 usage error
  std::vector<std::string> diagnostics;
};

/// Runs one CLI invocation (args exclude the program name).  All output goes
/// to the provided streams; nothing is read from or written to the process
/// globals except the BRACEKIT_MAX_ORDER environment default.
CommandResult run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                      std::ostream& err);

}  // namespace bracekit
