#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dedekind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`
/// only when the command succeeds or a verification fails; usage errors
/// write to `err` alone.
///
///   sum <m> <n>
///   count [--oracle] <m> <n>
///   enumerate [--with-sums] <m> <n>
///   classes <n>
///   verify <n_max>
///
/// `--json` switches every command to one JSON object per output line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli
