#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specdet::cli {

// Exit codes: 0 success, 1 precondition violated (bad flags, unknown family,
// caps), 2 unreadable or malformed input, 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specdet::cli
