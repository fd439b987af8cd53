#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kInfeasible = 1,
  kUsage = 2,
  kGenerationFailed = 3,
  kSolverFailed = 4,
};

/// Runs `mcp <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace mcp::cli
