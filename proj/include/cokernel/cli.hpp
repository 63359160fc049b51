#pragma once

#include <ostream>

namespace cokernel::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 20;
inline constexpr int kInputError = 2;
inline constexpr int kGuard = 3;

/// Entry point of the `cokernel` tool, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cokernel::cli
