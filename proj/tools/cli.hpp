#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xtropy::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,
    exit_usage = 2,
    exit_numeric = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xtropy::cli
