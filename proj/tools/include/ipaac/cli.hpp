#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipaac {

/// Runs the command line `args` (program name excluded). Returns the process
/// exit status: 0 on success, 1 when a check or solve fails, 2 on usage or
/// configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipaac
