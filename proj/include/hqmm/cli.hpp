#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace hqmm::cli {

// Exit codes: 0 ok, 1 unreadable input or usage error, 2 validation failure,
// 3 internal-consistency error, 4 verification check failed.
int run(std::vector<std::string> args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

int run(int argc, char** argv);

}  // namespace hqmm::cli
