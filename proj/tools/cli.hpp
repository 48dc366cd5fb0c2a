#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcsgap::cli {

enum ExitCode : int {
  kOk = 0,
  kParameterError = 2,
  kCertificationOrBudget = 3,
  kIoError = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view data);

}  // namespace lcsgap::cli
