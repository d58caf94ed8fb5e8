#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jocp::cli {

// Runs the command line given args (program name excluded). Returns the
// process exit code: 0 success, 1 internal disagreement or failure,
// 2 argument errors (usage goes to err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace jocp::cli
