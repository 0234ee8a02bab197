#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conehelly::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMalformedInput = 2,
  kCapacityExceeded = 3,
  kInternalError = 4,
};

/// Entry point of the `conehelly` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace conehelly::cli
