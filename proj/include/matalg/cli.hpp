#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matalg::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kInvalidSpectrum = 3,
  kVerifyMismatch = 4,
  kCapExceeded = 5,
};

/// Runs one command. `args` excludes the program name. Standard input is
/// read when an input path is "-".
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace matalg::cli
