#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqdim {

// Whole command-line driver; the binary in tools/ is a thin wrapper. Exit
// codes: 0 success, 1 mathematically negative verdict (invalid certificate,
// board not covered, counterexample found), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace eqdim
