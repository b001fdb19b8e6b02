#pragma once

#include <complex>
#include <numbers>

namespace bqc {

// Angle on the pi/4 lattice, stored as an integer number of eighths of a
// turn of pi (value = eighths * pi/4), always reduced mod 8. Adding pi is
// +4 mod 8; negation is (8 - eighths) mod 8.
struct Angle {
  int eighths = 0;

  static Angle of(int k) { return Angle{((k % 8) + 8) % 8}; }

  Angle plus(int k) const { return of(eighths + k); }
  Angle plus_pi() const { return of(eighths + 4); }
  Angle negated() const { return of(-eighths); }

  double radians() const { return eighths * std::numbers::pi / 4.0; }

  // e^{i * eighths * pi/4}, from a precomputed table
  std::complex<double> phase() const;

  bool operator==(const Angle&) const = default;
};

std::complex<double> eighth_phase(int k);

inline std::complex<double> Angle::phase() const { return eighth_phase(eighths); }

}  // namespace bqc
