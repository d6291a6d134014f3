#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // malformed input or unsupported request
inline constexpr int kExitHypothesis = 2;  // (m, a) violates the hypothesis
inline constexpr int kExitInternal = 3;    // a cross-check between formulas failed

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radram::cli
