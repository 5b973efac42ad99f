#pragma once

#include <iosfwd>

namespace unbendable {

enum ExitCode { kExitOk = 0, kExitInputError = 1, kExitInconclusive = 2 };

/// Entry point of the command-line tool, writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unbendable
