#pragma once

#include <string>
#include <vector>

namespace apx::cli {

struct CliResult {
  int exit_code = 0;  // 0 ok, 1 invariant/ratio violation, 2 usage or input error
  std::string out;    // JSON payload for stdout
};

// Runs one tool invocation (argv without the program name).  Returns the
// stdout payload instead of printing it, so tests can drive the tool
// in-process; diagnostics still go to stderr.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace apx::cli
