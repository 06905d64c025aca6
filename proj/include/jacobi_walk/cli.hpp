#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobi_walk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the `jacobi-walk` command line. `args` excludes the program name.
/// Tables go to `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobi_walk::cli
