#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanlab::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

// Runs one command line (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spanlab::cli
