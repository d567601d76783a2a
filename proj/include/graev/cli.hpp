#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graev::cli {

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, usage and parse errors to `err`. Returns 0 when every check passes,
/// 1 on a failed check, 2 on malformed input and 3 when a numeric decision
/// stayed inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bundled fixtures directory used by `suite` when --fixtures is absent.
std::string default_fixtures_dir();

}  // namespace graev::cli
