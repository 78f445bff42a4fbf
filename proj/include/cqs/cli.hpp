#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cqs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// Runs the `cqs` command line. `args` excludes the program name. Results go to
// `out` (or to the --output file); failures print one JSON line
// {"error": ..., "reason": ...} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cqs::cli
