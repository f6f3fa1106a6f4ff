#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cardguess::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kResource = 4,
};

// Environment variable consulted when `simulate` gets no --seed.
inline constexpr const char* kSeedEnvironmentVariable = "CARDGUESS_SEED";

// Runs one command line (args excludes the program name), writing the
// document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cardguess::cli
