#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kUsage = 2,
  kCapacity = 3,
  kVerifyFailed = 4,
};

/// Runs one command. args excludes the program name. Diagnostics go to err
/// as a single line starting with "error:".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace csg::cli
