#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // identity failures or computation errors
inline constexpr int kExitUsage = 2;

// args excludes the program name. Output goes to `out`, diagnostics and
// counterexamples to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Formats a double with 12 significant digits.
std::string format_real(double v);

}  // namespace gcdft::cli
