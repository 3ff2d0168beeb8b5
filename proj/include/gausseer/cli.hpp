#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gausseer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `gausseer` command line (`args` excludes the program name).
/// Subcommands: ingest, search, show, serve.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gausseer
