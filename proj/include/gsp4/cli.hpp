#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsp4 {

// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp4
