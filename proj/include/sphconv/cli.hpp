#pragma once

#include <iosfwd>

namespace sphconv {

inline constexpr int kExitInputError = 64;
inline constexpr int kExitInternal = 70;

/// Entry point of the sphconv command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphconv
