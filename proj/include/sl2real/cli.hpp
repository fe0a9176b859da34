#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2real::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line (args excludes the program name). Output goes to
/// `out`, diagnostics to `err`; `in` serves "-" matrix arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sl2real::cli
