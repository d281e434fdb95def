#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumsynth {

// Exit codes: 0 success / identity found, 1 definitive negative answer
// (no-solution, not-member, mismatch), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsynth
