#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optic::cli {

// Exit codes; part of the stable interface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitPathError = 2;
inline constexpr int kExitTypeError = 3;
inline constexpr int kExitInputError = 4;

// Runs one CLI invocation. `args` excludes the program name. The
// document comes from --input FILE or from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace optic::cli
