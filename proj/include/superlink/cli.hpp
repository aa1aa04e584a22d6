#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superlink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computed, but a check failed (validate)
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superlink::cli
