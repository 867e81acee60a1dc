#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // the checked property is verified false
inline constexpr int kExitError = 2;

// Runs one subcommand. `args` excludes the program name. Reports go to
// `out`, diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rf::cli
