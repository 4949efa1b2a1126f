#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccrep::cli {

// Exit codes: 0 verdict "yes" (or success), 1 verdict "no", 2 usage, parse
// or precondition error, 3 normal-form size limit exceeded.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kLimit = 3;

// Runs one command. `args` excludes the program name. Verdicts and results
// go to `out`, diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ccrep::cli
