#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mall::cli {

/// Exit codes: 0 ran and the answer is yes/valid, 1 ran and the answer is
/// no/invalid, 2 usage or input error.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

/// Runs one subcommand. `args` excludes the program name. The JSON result
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mall::cli
