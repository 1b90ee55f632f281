#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipfas::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         ///< bad arguments or unreadable / malformed input
  kPrecondition = 2,  ///< input rejected (not a tournament, has a 4-cycle, ...) or a certificate failed
  kInternal = 3,      ///< an invariant the algorithms guarantee did not hold
};

struct Options {
  bool color = false;  ///< colour diagnostics on `err`
};

/// Runs one command line (args[0] is the program name). Results go to `out`
/// as a single JSON document; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options = {});

}  // namespace bipfas::cli
