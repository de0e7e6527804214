#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanokit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kPreconditionError = 2;
inline constexpr int kBudgetRefused = 3;
inline constexpr int kInternalError = 4;

/// Runs one invocation. `args` excludes the program name. The JSON result
/// goes to `out`; errors go to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace fanokit::cli
