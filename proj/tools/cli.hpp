#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ossig {

/// Dispatches one CLI invocation. Returns the process exit code:
/// 0 success / experiment pass, 1 failed verification or experiment,
/// 2 usage error. Reads OSSIG_SEED for the default seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace ossig
