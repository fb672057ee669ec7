#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triassoc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace triassoc::cli
