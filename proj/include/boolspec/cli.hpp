#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolspec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOutOfScope = 3;
inline constexpr int kExitVerificationFailure = 4;

/// Entry point of the `boolspec` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolspec
