#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsl_cli {

// Dispatch one invocation; stdout carries exactly one JSON object or CSV
// table, diagnostics go to err.  Returns the process exit code:
// 0 ok, 1 assertion/check failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tsl_cli
