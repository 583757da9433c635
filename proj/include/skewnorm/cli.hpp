#pragma once

#include <string>
#include <vector>

namespace skewnorm {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name). Exit status 0 on
/// success, 1 on domain errors, 2 on usage, parse and configuration errors.
CliResult run_cli(const std::vector<std::string> &args);

} // namespace skewnorm
