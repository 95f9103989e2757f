#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddc {

// Command-line front end. `args` excludes the program name. Returns the
// process exit status: 0 success, 1 usage or domain error, 2 table diff
// mismatch. Requested output goes to `out`, progress and errors to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddc
