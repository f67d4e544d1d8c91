#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace groupgraph {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,      // invalid group, unreadable or malformed file, order cap
  kExitUsage = 2,        // malformed command line, including group spec text
  kExitArtifactBug = 3,  // flow/oracle disagreement or failed internal invariant
};

// Runs the tool with args (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupgraph
