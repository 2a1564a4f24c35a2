#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlegraph {

/// Exit codes: 0 affirmative result, 1 well-formed negative result, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name. An input path of `-`
/// reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace circlegraph
