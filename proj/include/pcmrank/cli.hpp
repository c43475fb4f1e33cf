#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcmrank {

/// Runs the command-line front end against `args` (excluding the program
/// name). Exit codes: 0 success, 2 input/validation error, 3 unknown
/// ranking, 4 independence-table mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcmrank
