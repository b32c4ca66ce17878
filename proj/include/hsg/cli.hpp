#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// (or --out), diagnostics to `err`. Output is assembled completely before it
/// is written, so a failing run writes no data.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsg::cli
