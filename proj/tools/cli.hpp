#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palsum::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,            // bad arguments or malformed numbers
  kDomain = 2,           // input outside an operation's domain, or budget exceeded
  kVerificationSurprise = 3,  // a twin turned out to be a sum of two palindromes
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palsum::cli
