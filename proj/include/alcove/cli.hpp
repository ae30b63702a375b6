#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alcove::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcove::cli
