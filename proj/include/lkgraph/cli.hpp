#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lkgraph::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInequivalent = 1,
  kDomainViolation = 2,
  kInputError = 3,
  kInternalFailure = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 0x6c6b5f7365656401ULL;
inline constexpr int kJsonSchemaVersion = 1;

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lkgraph::cli
