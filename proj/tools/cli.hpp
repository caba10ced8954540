// Command line front end, callable in-process.

#ifndef CONGNET_TOOLS_CLI_HPP_
#define CONGNET_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace congnet::cli {

  enum ExitCode : int {
    ok                = 0,
    usage_error       = 1,
    parse_error       = 2,
    validation_failed = 3,
    not_stabilized    = 4,
    disagreement      = 5,
    lattice_too_large = 6
  };

  //! args excludes the program name.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace congnet::cli

#endif  // CONGNET_TOOLS_CLI_HPP_
