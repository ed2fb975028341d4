#pragma once

// `solvpot` command-line front end. Verbs: eval, map, verify, params, families.

#include <iosfwd>
#include <string>
#include <vector>

namespace solvpot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvpot::cli
