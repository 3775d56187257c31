#pragma once

#include <iosfwd>

namespace hsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed
inline constexpr int kExitUsage = 2;   // bad arguments or domain error

/// Entry point behind the `hsconvex` binary. Normal output goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace hsc::cli
