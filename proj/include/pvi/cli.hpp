#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pvi {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvi
