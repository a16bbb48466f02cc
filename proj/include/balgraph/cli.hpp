#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balgraph {

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns 0 for success or a true verdict, 1 for a false verdict, 2 for
/// usage or format errors (diagnostics go to `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balgraph
