#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cqsym::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one command. `args` excludes the program name. Results and error
/// objects are written to `out` as JSON; `in` backs `--in -` and a missing
/// `--in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace cqsym::cli
