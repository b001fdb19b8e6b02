#include "bqc/verify.hpp"

#include <array>
#include <fmt/core.h>

#include "bqc/statevector.hpp"

namespace bqc {

namespace {

constexpr double kFidelityTol = 1e-9;

// For all (z', x', theta, b): starting from |psi_{z',x'}(B_s, B_t)>,
// measuring B_s at encode_angle(theta, pad_rule(z',x')) and observing b
// must leave B_t in |theta + b*pi>. Outcomes are sampled, so each case
// retries seeds until both b branches have been seen.
CheckResult check_byproduct(const PadRule& pad_rule, std::uint64_t seed) {
  int covered = 0;
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < 2; ++x)
      for (int a = 0; a < 8; ++a) {
        const PadKey pad = pad_rule(BellOutcome{z, x});
        const Angle tilde = encode_angle(Angle::of(a), pad);
        std::array<bool, 2> seen{false, false};
        for (int trial = 0; trial < 256 && !(seen[0] && seen[1]); ++trial) {
          auto sv = StateVector::bell_pair(z, x, "B_s", "B_t");
          RandomStream rng(derive_seed(seed, fmt::format("byprod/{}", trial)));
          const int b = sv.measure_rotated("B_s", tilde, rng).b;
          if (seen[b]) continue;
          const auto expected = StateVector::plus_angle(Angle::of(a + 4 * b), "B_t");
          if (fidelity(sv, expected) < 1.0 - kFidelityTol)
            return {"byproduct-64",
                    false,
                    fmt::format("(z'={},x'={},theta={},b={}) residual mismatch", z,
                                x, a, b)};
          seen[b] = true;
          ++covered;
        }
        if (!(seen[0] && seen[1]))
          return {"byproduct-64", false, "failed to observe both outcomes"};
      }
  return {"byproduct-64", true, fmt::format("{} cases", covered)};
}

CheckResult check_swap_identity(std::uint64_t seed) {
  std::array<int, 4> counts{};
  std::array<bool, 4> residual_checked{};
  const int trials = 4096;
  for (int trial = 0; trial < trials; ++trial) {
    auto pair_s = StateVector::bell_pair(0, 0, "B_s", "A_s");
    auto pair_t = StateVector::bell_pair(0, 0, "B_t", "A_t");
    auto joint = StateVector::tensor(pair_s, pair_t);
    RandomStream rng(derive_seed(seed, fmt::format("swap/{}", trial)));
    const BellOutcome o = joint.bell_measure("A_s", "A_t", rng);
    const int idx = o.z * 2 + o.x;
    ++counts[idx];
    if (!residual_checked[idx]) {
      const auto expected = StateVector::bell_pair(o.z, o.x, "B_s", "B_t");
      if (fidelity(joint, expected) < 1.0 - kFidelityTol)
        return {"swap-identity", false,
                fmt::format("residual mismatch for outcome ({},{})", o.z, o.x)};
      residual_checked[idx] = true;
    }
  }
  for (int idx = 0; idx < 4; ++idx) {
    if (!residual_checked[idx])
      return {"swap-identity", false,
              fmt::format("outcome {} never observed", idx)};
    const double f = static_cast<double>(counts[idx]) / trials;
    if (f < 0.22 || f > 0.28)
      return {"swap-identity", false,
              fmt::format("outcome {} frequency {:.4f} outside [0.22,0.28]", idx, f)};
  }
  return {"swap-identity", true, fmt::format("{} trials", trials)};
}

CheckResult check_uniformity(std::uint64_t seed) {
  const int trials = 4096;
  int zeros = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto sv = StateVector::bell_pair(0, 0, "B", "A");
    RandomStream rng(derive_seed(seed, fmt::format("unif/{}", trial)));
    const Angle tilde = Angle::of(trial % 8);
    if (sv.measure_rotated("B", tilde, rng).b == 0) ++zeros;
  }
  const double f = static_cast<double>(zeros) / trials;
  if (f < 0.47 || f > 0.53)
    return {"rotated-uniformity", false,
            fmt::format("P(b=0) = {:.4f} outside [0.47,0.53]", f)};
  return {"rotated-uniformity", true, fmt::format("P(b=0) = {:.4f}", f)};
}

}  // namespace

std::vector<CheckResult> run_verification(const PadRule& pad_rule,
                                          std::uint64_t seed) {
  return {check_byproduct(pad_rule, seed), check_swap_identity(seed),
          check_uniformity(seed)};
}

}  // namespace bqc
