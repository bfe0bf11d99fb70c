#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperappell::cli {

enum ExitCode : int { success = 0, identity_failure = 1, usage_error = 2, domain_error = 3 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless `--out` redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperappell::cli
