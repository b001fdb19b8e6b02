#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "bqc/angle.hpp"
#include "bqc/rng.hpp"
#include "bqc/types.hpp"

namespace bqc {

// Exact complex-amplitude register over at most 4 labeled qubits.
//
// Basis ordering is big-endian in label order: the first label is the
// leftmost ket symbol, so a 2-qubit register with labels (p, q) stores
// amplitudes for |00>, |01>, |10>, |11> with p the first digit.
// Measured qubits are removed from the register and the residual
// amplitudes renormalized; a fully measured register has zero qubits.
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  StateVector() = default;

  // Bell state |psi_{z,x}> = (|0,x> + (-1)^z |1,x^1>)/sqrt(2),
  // first label carries the B side, second the A side.
  static StateVector bell_pair(int z, int x, std::string first_label,
                               std::string second_label);

  // Single qubit (|0> + e^{i theta} |1>)/sqrt(2).
  static StateVector plus_angle(Angle theta, std::string label);

  // Single computational-basis qubit |bit>.
  static StateVector computational_state(int bit, std::string label);

  // Joint register a (x) b; labels must be disjoint.
  static StateVector tensor(const StateVector& a, const StateVector& b);

  int qubit_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has(std::string_view label) const;

  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm_squared() const;

  // Bell-basis measurement of (first, second); samples with Born
  // probabilities, removes both qubits, renormalizes the rest.
  BellOutcome bell_measure(std::string_view first, std::string_view second,
                           RandomStream& rng);

  // Measurement in {(|0> +- e^{i theta_tilde}|1>)/sqrt(2)}; outcome b has
  // basis state (|0> + (-1)^b e^{i theta_tilde}|1>)/sqrt(2).
  MeasuredBit measure_rotated(std::string_view label, Angle theta_tilde,
                              RandomStream& rng);

  // Computational-basis measurement; used for Alice's trace-out discards.
  MeasuredBit measure_computational(std::string_view label, RandomStream& rng);

 private:
  std::vector<std::string> labels_;
  std::vector<Amplitude> amps_;

  int position_of(std::string_view label) const;  // throws on unknown label
  int sample_projection(const std::vector<int>& target_positions,
                        const std::vector<std::vector<Amplitude>>& outcome_coeffs,
                        RandomStream& rng);
};

// |<a|b>|^2; requires equal qubit counts and matching label sets, aligns
// b's basis ordering to a's before taking the overlap.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace bqc
