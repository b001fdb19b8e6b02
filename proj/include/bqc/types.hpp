#pragma once

namespace bqc {

// Bell-measurement outcome (z', x').
struct BellOutcome {
  int z = 0;
  int x = 0;
  bool operator==(const BellOutcome&) const = default;
};

// One-time-pad parameters (z, x) for the angle encoding.
struct PadKey {
  int z = 0;
  int x = 0;
  bool operator==(const PadKey&) const = default;
};

struct MeasuredBit {
  int b = 0;
  bool operator==(const MeasuredBit&) const = default;
};

}  // namespace bqc
