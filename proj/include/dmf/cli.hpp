#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmf::cli {

/// Runs the command line given argv-style arguments (without argv[0]).
/// Returns the process exit code: 0 success / all verified, 1 verification
/// failure, 2 usage or configuration error.  Output is byte-deterministic
/// for fixed flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmf::cli
