#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace outvcd::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kIneligible = 2,
  kInvariantViolation = 3,
};

struct VerifyOptions {
  std::size_t max_nodes = 8;
  std::size_t bound = 4;
  std::uint32_t seed = 2024;
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Invariant suite over the generated corpus: bounds and theorem formulas,
/// structural facts, generator counts, commutation certificates on small
/// graphs, lift round trips on trees, PSigma ranks and the ideal-edge Claim.
VerifySummary verify_corpus(const VerifyOptions& options);

/// Entry point shared by main() and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace outvcd::cli
