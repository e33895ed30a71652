#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xbinom::cli {

enum ExitCode : int {
    kOk = 0,
    kViolated = 1,
    kUsage = 2,
    kOverflow = 3,
    kNonConvergent = 4,
};

// Largest table the `table` subcommand will emit.
inline constexpr unsigned long long kMaxTableCells = 10'000'000ULL;

// Runs the command line `args` (without the program name), writing the
// record to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xbinom::cli
