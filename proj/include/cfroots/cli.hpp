#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfroots::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kNotSquarefree = 3,
  kVerifyFailed = 4,
  kInternalError = 5,
};

/// Runs the `isolate` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cfroots::cli
