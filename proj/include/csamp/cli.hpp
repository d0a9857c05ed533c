#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csamp::cli {

/// Runs the csamp command line against explicit streams. `args` excludes the
/// program name. Returns the process exit code: 0 on success, nonzero with a
/// diagnostic on err otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csamp::cli
