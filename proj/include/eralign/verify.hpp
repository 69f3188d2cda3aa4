#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eralign {

struct VerifyOptions {
  unsigned depth = 8;    // largest cycle length, at most 8
  unsigned samples = 4;  // random weight matrices per length
  std::uint64_t seed = 1;
  bool mutate = false;   // flip the sign inside the closed form of d_l
};

struct CheckStatus {
  std::string name;
  unsigned ell = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Runs the generating-function identities and inequalities for every cycle
/// length up to `depth` against the enumeration oracles.
std::vector<CheckStatus> verify_gf(const VerifyOptions& options);

}  // namespace eralign
