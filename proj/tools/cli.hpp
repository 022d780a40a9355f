#pragma once

#include <string>
#include <vector>

namespace lowlying::cli {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

/// Parses and runs one command line (without the program name).
/// Exit codes: 0 success, 1 usage or configuration error, 2 identity failure.
CliResult run(const std::vector<std::string>& args);

} // namespace lowlying::cli
