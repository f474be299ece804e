#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linerec::cli {

enum ExitCode : int { Ok = 0, DetectedFailure = 2, InputError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "4..10", "4,6,8" or a single value.
std::vector<std::size_t> parse_range(const std::string& text);

}  // namespace linerec::cli
