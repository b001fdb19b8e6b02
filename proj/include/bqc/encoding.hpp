#pragma once

#include "bqc/angle.hpp"
#include "bqc/types.hpp"

namespace bqc {

// theta_tilde = (-1)^x theta + z*pi on the eighths lattice.
inline Angle encode_angle(Angle theta, PadKey pad) {
  const int v = (pad.x ? -theta.eighths : theta.eighths) + 4 * pad.z;
  return Angle::of(v);
}

// Inverse of encode_angle for the same pad.
inline Angle decode_angle(Angle theta_tilde, PadKey pad) {
  const int v = theta_tilde.eighths - 4 * pad.z;
  return Angle::of(pad.x ? -v : v);
}

// Pad absorbing the entanglement-swapping byproduct: with this pad on the
// s-side angle, measuring B_s at the encoded angle leaves B_t in
// |theta + b*pi> for every theta and outcome b.
inline PadKey byproduct_params(BellOutcome outcome) {
  return PadKey{outcome.z, outcome.x ^ 1};
}

}  // namespace bqc
