#pragma once

#include <iosfwd>

namespace semitsp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kSolverError = 3;
inline constexpr int kVerificationFailure = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitsp::cli
