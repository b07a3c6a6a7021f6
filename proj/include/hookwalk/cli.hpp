#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hookwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;

/// Entry point behind the `hookwalk` binary. `args` excludes the program
/// name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hookwalk::cli
