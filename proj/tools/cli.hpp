#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kTimeout = 3,
};

/// Runs one command. `args` excludes the program name. "-" as a path means
/// `in` for inputs and `out` for outputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace steiner::cli
