#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grext {

inline constexpr const char* kVersion = "grext 1.0.0";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 2 input error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grext
