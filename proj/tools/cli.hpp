#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scalekit::cli {

// Exit codes: 0 success, 1 failed check or numerical failure, 2 invalid input.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal form, independent of the locale.
std::string number(double v);

}  // namespace scalekit::cli
