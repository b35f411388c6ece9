#pragma once

#include <iosfwd>

namespace cube {

enum ExitCode : int { kOk = 0, kNumericalFailure = 1, kUsageError = 2 };

/// Entry point of the `cube` tool, split out so tests can drive it with
/// in-memory streams. Files named by --out are written directly.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cube
