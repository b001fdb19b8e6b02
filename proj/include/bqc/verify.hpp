#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bqc/encoding.hpp"

namespace bqc {

using PadRule = std::function<PadKey(BellOutcome)>;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exhaustive oracle suites: the 64-case byproduct identity, the
// entanglement-swapping identity with outcome-frequency bounds, and the
// measurement uniformity bounds. The pad rule is injectable so a broken
// rule is provably caught.
std::vector<CheckResult> run_verification(const PadRule& pad_rule = byproduct_params,
                                          std::uint64_t seed = 0x5eed);

}  // namespace bqc
