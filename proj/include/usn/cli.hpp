// Command-line surface: construct, verify, exact solve, mutate, label-any,
// bench. Kept as a library function so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace usn {

// Exit codes: 0 success/valid, 1 invalid labeling, 2 usage or input error,
// 3 solver timeout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace usn
