#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abq::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kIoFailure = 2 };

// Runs one command line (without the program name). Payload goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace abq::cli
