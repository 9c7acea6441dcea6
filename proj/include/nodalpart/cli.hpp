#pragma once

#include <iosfwd>

namespace nodalpart::cli {

enum ExitCode : int { ok = 0, assertion_failed = 1, usage_error = 2, instability = 3 };

// JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace nodalpart::cli
