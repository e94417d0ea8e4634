#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intbalance::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace intbalance::cli
