// The betaorbit command line, callable in-process.

#pragma once

#include <ostream>

namespace betaorbit::cli {

inline constexpr int kExitDomain = 1;
inline constexpr int kExitPrecision = 2;
inline constexpr int kExitUndetermined = 3;
inline constexpr int kExitVerifyFailed = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betaorbit::cli
