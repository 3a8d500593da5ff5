#pragma once

#include <iosfwd>

namespace hlab {

// Full CLI entry point, separated from main() so tests can drive it.
// Returns the process exit code: 0 success/PASS, 1 FAIL verdict, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlab
