#pragma once

#include <ostream>

namespace inscribed::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;

// Parses argv (argv[0] is the program name) and runs one subcommand. Results
// go to `out` (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace inscribed::cli
