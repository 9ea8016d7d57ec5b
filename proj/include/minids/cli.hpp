#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minids {

/// Entry point of the `minids` command. args excludes the program name.
/// Exit codes: 0 success, 1 input/parse error or invalid solution,
/// 2 bad flags (usage printed to err).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace minids
