#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonia::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kCapHit = 3,
    kOverflow = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace harmonia::cli
