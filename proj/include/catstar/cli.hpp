#pragma once

#include <string>
#include <vector>

namespace catstar::cli {

struct RunResult {
  int exit_code = 0;
  std::string json;
  std::string human;
};

// Exit codes: 0 pass, 1 check failure, 2 structural or parse error.
// Runs one command given argv-style arguments (program name excluded).
RunResult run(const std::vector<std::string>& args);

}  // namespace catstar::cli
