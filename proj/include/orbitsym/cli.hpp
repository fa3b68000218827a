#ifndef ORBITSYM_CLI_HPP
#define ORBITSYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitsym {

/// Command line driver. Exit codes: 0 when every check passes, 1 on a
/// verification failure or computational error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitsym

#endif
