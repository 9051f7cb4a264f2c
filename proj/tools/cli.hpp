#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;

// Runs one command line (args excludes the program name). Reads stdin only
// when a word or normal form is expected and was not given as an option.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cayley::cli
