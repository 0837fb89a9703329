// Command-line surface. run_cli is separated from main() so the whole
// argument-to-output path is testable in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opbar {

// args exclude the program name. Returns the process exit code:
// 0 ok, 1 usage/domain error, 2 a comparison stayed undecided at the cap.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace opbar
