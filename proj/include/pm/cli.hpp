#pragma once

// The `pm` command line: argument parsing, report rendering and exit codes.

#include <iosfwd>
#include <string>
#include <vector>

namespace pm::cli {

inline constexpr int kExitOk = 0;        // success, In, Verified
inline constexpr int kExitNegative = 1;  // NotIn, FailedAt, failing suite
inline constexpr int kExitUnknown = 2;   // UnknownAtDepth, resource limits
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs one command; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pm::cli
