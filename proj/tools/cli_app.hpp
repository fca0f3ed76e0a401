#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace limbs_cli {

/// Runs the command line tool against explicit streams. Returns the process
/// exit code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Validates one output line against the record grammar used by the tool.
bool parse_check_line(const std::string& line);

} // namespace limbs_cli
