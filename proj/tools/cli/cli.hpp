#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathsum::cli {

/// Parses `args` (without the program name), runs one subcommand and returns
/// its exit code: 0 ok, 1 validation failure, 2 bad arguments, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pathsum::cli
