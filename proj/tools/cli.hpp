#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdual {

// exit statuses
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "[1,0]x4", "[1,0]x2,[0,1]", "[1,0] [0,1]x3"; empty text gives no insertions.
std::vector<std::vector<int>> parse_weight_list(const std::string& text);

}  // namespace sdual
