#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copula_transport::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumerical = 4;

// Entry point of the copula-transport tool. Results go to `out` (or to the
// files named by --out), diagnostics to `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copula_transport::cli
