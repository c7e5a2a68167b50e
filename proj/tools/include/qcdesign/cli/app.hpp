#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcd::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2 };

/// Entry point of the qcdesign command. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcd::cli
