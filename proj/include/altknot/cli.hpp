#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altknot {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Subcommands: gen,
/// charpoly, verify, census, components, decompose, lookup.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altknot
