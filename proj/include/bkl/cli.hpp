#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bkl::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bkl::cli
