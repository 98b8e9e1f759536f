#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcolor {

// Exit codes: 0 success, 1 usage or input error, 2 falsified verdicts,
// 3 inconclusive where a definite answer was requested.
// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcolor
