#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquecover {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 usage/input/I-O error, 2 verification failure.
int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cliquecover
