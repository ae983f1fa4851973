#pragma once

#include <string>
#include <vector>

namespace torrec {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

/// Batch front end. Returns the process exit code: 0 success, 1 usage,
/// 2 hypothesis rejection, 3 budget/cap exhaustion.
int run_cli(const std::vector<std::string>& args);

}  // namespace torrec
