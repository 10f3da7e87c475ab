#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace roomtheory::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Runs the command line (args[0] is the program name) and returns the exit
// code. Reports go to their --out file or to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roomtheory::cli
