#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framekit {

// Runs one framekit command. `args` excludes the program name. Returns the
// process exit code: 0 when the property holds, 1 for a mathematically
// negative answer, 2 for unusable input (bad flags, unreadable or malformed
// files, shape mismatches).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace framekit
