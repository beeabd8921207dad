#pragma once

#include "qneg/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qneg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification did not hold
inline constexpr int kExitUsage = 2;

/// kExitOk when every checked case passed, else kExitFailed.
int verify_exit_code(const SweepReport& report);

/// Runs the qneg command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qneg::cli
