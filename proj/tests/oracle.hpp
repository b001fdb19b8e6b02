#pragma once

// Brute-force dense-vector oracle used to compute expected values
// independently of the simulator's projection machinery. Everything here
// is naive: explicit kets, Kronecker products, and bra application by
// direct summation over basis indices.

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using cvec = std::vector<std::complex<double>>;

inline std::complex<double> phase_of_eighths(int k) {
  const double rad = (((k % 8) + 8) % 8) * std::numbers::pi / 4.0;
  return {std::cos(rad), std::sin(rad)};
}

inline cvec angle_ket(int eighths) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, phase_of_eighths(eighths) * s};
}

// |psi_{z,x}> = (|0,x> + (-1)^z |1, x^1>)/sqrt(2)
inline cvec bell_ket(int z, int x) {
  const double s = 1.0 / std::sqrt(2.0);
  cvec v(4, 0.0);
  v[(0 << 1) | x] = s;
  v[(1 << 1) | (x ^ 1)] = z ? -s : s;
  return v;
}

inline cvec kron(const cvec& a, const cvec& b) {
  cvec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

inline double norm_squared(const cvec& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

// |<a|b>|^2 for normalized vectors of equal dimension.
inline double overlap(const cvec& a, const cvec& b) {
  assert(a.size() == b.size());
  std::complex<double> inner = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
  return std::norm(inner);
}

// Applies the bra conj(bra_coeffs) over the qubits at `positions`
// (big-endian, position 0 is the leftmost ket digit) of an n-qubit state.
// Returns the outcome probability and the normalized residual over the
// remaining qubits in their original order.
inline std::pair<double, cvec> project(const cvec& state, int n_qubits,
                                       const std::vector<int>& positions,
                                       const cvec& bra_coeffs) {
  const int nr = n_qubits - static_cast<int>(positions.size());
  cvec residual(std::size_t{1} << nr, 0.0);
  auto bit_at = [n_qubits](std::size_t idx, int pos) {
    return static_cast<int>((idx >> (n_qubits - 1 - pos)) & 1u);
  };
  for (std::size_t f = 0; f < state.size(); ++f) {
    std::size_t t = 0;
    for (int p : positions) t = (t << 1) | bit_at(f, p);
    std::size_t r = 0;
    for (int p = 0; p < n_qubits; ++p) {
      bool is_target = false;
      for (int q : positions) is_target = is_target || (q == p);
      if (!is_target) r = (r << 1) | bit_at(f, p);
    }
    residual[r] += std::conj(bra_coeffs[t]) * state[f];
  }
  const double prob = norm_squared(residual);
  if (prob > 0.0) {
    const double scale = 1.0 / std::sqrt(prob);
    for (auto& a : residual) a *= scale;
  }
  return {prob, residual};
}

}  // namespace oracle
