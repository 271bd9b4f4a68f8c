#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcert::cli {

// Full command-line surface. `args` excludes the program name. Exit status:
// 0 = all selected checks passed, 1 = at least one check failed,
// 2 = usage or configuration error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qcert::cli
