#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mps::cli {

/// Runs one `mps` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors, 2 on input, parse and IO errors.
/// Errors are written to `err` as a single line `error: <Kind>: <message>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mps::cli
