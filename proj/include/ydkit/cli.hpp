#pragma once

#include <iosfwd>

namespace ydkit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitVerify = 3, kExitFieldNotSplitting = 4, kExitCheckFailed = 5 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ydkit
