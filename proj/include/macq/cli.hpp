#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macq::cli {

/// Exit codes: 0 success, 1 invalid input, 2 an identity check failed.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kMismatch = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace macq::cli
