#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degex::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kValidationError = 2,
  kLimitRefusal = 3,
};

/// Runs the degex command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degex::cli
