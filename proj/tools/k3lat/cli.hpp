#pragma once

#include <string>
#include <vector>

namespace k3lat::cli {

inline constexpr const char* kSchema = "k3lat/1";

struct CommandResult {
  int exit_code = 0;       // 0 ok, 1 computation error, 2 malformed input
  std::string output;      // stdout: payload (JSON or human table)
  std::string errors;      // stderr: diagnostics, warnings, timing
  double timing_ms = 0;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace k3lat::cli
