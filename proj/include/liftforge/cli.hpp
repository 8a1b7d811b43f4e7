// Command-line front end. Exit status: 0 verified, 1 mathematical mismatch
// (not proper, table disagreement, failed claim), 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"

namespace liftforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Accepts "k:HEX", ANF text in x1..xk, or a landscape expression.
Rule parse_rule_arg(const std::string& text);

/// "a..b" or "a".
std::pair<int, int> parse_range(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace liftforge
