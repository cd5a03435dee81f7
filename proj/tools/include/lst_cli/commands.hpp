#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lst/error.hpp"

namespace lst::cli {

// Process exit statuses. Anything else is a bug.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformedInput = 2,
  kExitRankDeficient = 3,
  kExitConfig = 4,
  kExitPlotDimension = 5,
};

int exit_code_for(ErrorCode code);

// Worker count for bench: LST_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned thread_count();

// Runs one command line (without the program name). Requested artifacts go to
// `out` (or to --out files), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lst::cli
