#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDenominatorZero = 3;

/// Entry point behind the acsl binary. `args` excludes the program name.
/// Results go to `out` as one JSON document; errors go to `err` as
/// {"error": {"kind": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker bound from ACSL_THREADS, defaulting to the hardware concurrency.
unsigned threads_from_environment();

}  // namespace acsl::cli
