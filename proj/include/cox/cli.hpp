#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cox {

// Runs one CLI invocation. JSON result on `out`, human summary on `err`.
// Exit status: 0 success, 1 domain error, 2 usage error, 3 resource-cap error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cox
