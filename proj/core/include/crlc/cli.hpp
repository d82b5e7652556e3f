#pragma once

#include <string>
#include <vector>

namespace crlc::cli {

struct CommandResult {
  int exit_code = 0;     // 0 pass, 1 fail, 2 usage error, 3 inconclusive
  std::string output;
};

/// Executes one toolkit command. Subcommands: catalog, verify, classify,
/// ahlfors, compose, jet, replicate. Configuration precedence:
/// flags > environment (CRLC_ORDER, CRLC_PRECISION) > defaults (20, 128).
CommandResult run(const std::vector<std::string>& argv);

}  // namespace crlc::cli
