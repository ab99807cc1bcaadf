#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace magma {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 for a completed run, 1 for a property-violation
// verdict, 2 for input or parameter errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magma
