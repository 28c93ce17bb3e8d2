#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entropy_adjoint::cli {

// Exit codes: 0 success / property holds, 1 property fails, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kInputError = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report for `toy case1|case2|case3`; ok is cleared when a reproduced claim
// does not come out as expected.
std::string toy_report(const std::string& which, int grid_n, bool& ok);

}  // namespace entropy_adjoint::cli
