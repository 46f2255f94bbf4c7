#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcns::cli {

/// Exit codes of the `hcns` tool.
enum ExitCode : int {
    Ok = 0,
    Usage = 1,
    NotFound = 2,
    Parse = 3,
    Math = 4,
    Io = 5,
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcns::cli
