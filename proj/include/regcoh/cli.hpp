#ifndef REGCOH_CLI_HPP
#define REGCOH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace regcoh {

/// Runs the command-line interface.  Exit codes: 0 success, 1 validation
/// error, 2 usage error.  Output is buffered, so a failing run never emits a
/// partial table.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regcoh

#endif  // REGCOH_CLI_HPP
