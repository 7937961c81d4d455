#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/**
 * Runs one command line (args excludes the program name) and returns the
 * exit status: 0 on success, 1 when a verified bound fails, 2 on usage,
 * parse or IO errors.
 *
 *   gen k3 --n N [--initial]
 *   gen affine --q Q --n N
 *   gen random --n N --k K --seed S
 *   gen density-split --parts a,b,c --k K
 *   verify --input F [--trace] [--json]
 *   bound --n N --k K [--json]
 *   search --n N --k K [--jobs J] [--max-n N] [--max-k K]
 *   trace --input F
 *   circuit --input F [--color C] [--json]
 *
 * `gen` writes the coloring text format to `out` (or --output FILE).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcc::cli
