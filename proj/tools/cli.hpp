#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcheck::cli {

constexpr int kExitIsomorphism = 0;
constexpr int kExitNotIsomorphism = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcheck::cli
