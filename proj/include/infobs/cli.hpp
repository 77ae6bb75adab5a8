#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infobs {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitResourceExceeded = 3,
};

int run_cli(int argc, char** argv);
/// argv without the program name; output goes to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infobs
