#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sring::cli {

// Runs one command; `args` excludes the program name. Returns 0 on
// success, 1 on a property violation, 2 on an input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sring::cli
