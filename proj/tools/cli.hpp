#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpc::cli {

  // Runs the command line (without the program name). Returns 0 on success,
  // 1 when a self-test suite fails and 2 on usage or parse errors.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace gpc::cli
