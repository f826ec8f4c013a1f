#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taulab {

// Full command-line surface.  args excludes the program name.  Returns the
// process exit code: 0 success, 2 parse or flag error, 3 audit violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taulab
