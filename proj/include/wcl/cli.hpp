#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcl {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // a check came out negative
inline constexpr int kExitUsage = 2;  // bad arguments, unreadable or malformed input

// Runs the `wcl` tool on args (without the program name). Results go to out,
// diagnostics to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcl
