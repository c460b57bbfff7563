#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fppctl {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one fppctl invocation. args excludes the program name. Results go to
/// out (or the --output file), diagnostics and summaries to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fppctl
