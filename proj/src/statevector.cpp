#include "bqc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bqc {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Coefficients of |psi_{z,x}> over |b1 b2>.
std::vector<std::complex<double>> bell_coeffs(int z, int x) {
  std::vector<std::complex<double>> c(4, 0.0);
  c[(0 << 1) | x] = kInvSqrt2;
  c[(1 << 1) | (x ^ 1)] = (z ? -kInvSqrt2 : kInvSqrt2);
  return c;
}

}  // namespace

std::complex<double> eighth_phase(int k) {
  static const std::complex<double> table[8] = {
      {1.0, 0.0},
      {kInvSqrt2, kInvSqrt2},
      {0.0, 1.0},
      {-kInvSqrt2, kInvSqrt2},
      {-1.0, 0.0},
      {-kInvSqrt2, -kInvSqrt2},
      {0.0, -1.0},
      {kInvSqrt2, -kInvSqrt2},
  };
  return table[((k % 8) + 8) % 8];
}

StateVector StateVector::bell_pair(int z, int x, std::string first_label,
                                   std::string second_label) {
  StateVector sv;
  sv.labels_ = {std::move(first_label), std::move(second_label)};
  auto c = bell_coeffs(z, x);
  sv.amps_.assign(c.begin(), c.end());
  return sv;
}

StateVector StateVector::plus_angle(Angle theta, std::string label) {
  StateVector sv;
  sv.labels_ = {std::move(label)};
  sv.amps_ = {kInvSqrt2, theta.phase() * kInvSqrt2};
  return sv;
}

StateVector StateVector::computational_state(int bit, std::string label) {
  StateVector sv;
  sv.labels_ = {std::move(label)};
  sv.amps_ = {bit ? 0.0 : 1.0, bit ? 1.0 : 0.0};
  return sv;
}

StateVector StateVector::tensor(const StateVector& a, const StateVector& b) {
  for (const auto& l : b.labels_) {
    if (a.has(l)) throw std::logic_error("tensor: duplicate qubit label " + l);
  }
  if (a.qubit_count() + b.qubit_count() > 4)
    throw std::logic_error("tensor: register limit of 4 qubits exceeded");
  StateVector sv;
  sv.labels_ = a.labels_;
  sv.labels_.insert(sv.labels_.end(), b.labels_.begin(), b.labels_.end());
  sv.amps_.resize(a.amps_.size() * b.amps_.size());
  for (std::size_t i = 0; i < a.amps_.size(); ++i)
    for (std::size_t j = 0; j < b.amps_.size(); ++j)
      sv.amps_[i * b.amps_.size() + j] = a.amps_[i] * b.amps_[j];
  return sv;
}

bool StateVector::has(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

int StateVector::position_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::logic_error("unknown qubit label: " + std::string(label));
  return static_cast<int>(it - labels_.begin());
}

// Projects onto one of the given outcome bras over the target qubits,
// sampled with Born probabilities; removes the targets and renormalizes.
// outcome_coeffs[o] lists the ket coefficients of outcome o over the
// targets' joint basis (big-endian in target_positions order).
int StateVector::sample_projection(
    const std::vector<int>& target_positions,
    const std::vector<std::vector<Amplitude>>& outcome_coeffs,
    RandomStream& rng) {
  const int n = qubit_count();
  const int nt = static_cast<int>(target_positions.size());
  const int nr = n - nt;
  const std::size_t full_dim = amps_.size();
  const std::size_t res_dim = std::size_t{1} << nr;

  std::vector<int> residual_positions;
  for (int p = 0; p < n; ++p) {
    if (std::find(target_positions.begin(), target_positions.end(), p) ==
        target_positions.end())
      residual_positions.push_back(p);
  }

  auto bit_at = [n](std::size_t idx, int pos) {
    return static_cast<int>((idx >> (n - 1 - pos)) & 1u);
  };

  std::vector<std::vector<Amplitude>> residuals;
  std::vector<double> probs;
  for (const auto& coeffs : outcome_coeffs) {
    std::vector<Amplitude> res(res_dim, 0.0);
    for (std::size_t f = 0; f < full_dim; ++f) {
      std::size_t t = 0;
      for (int p : target_positions) t = (t << 1) | bit_at(f, p);
      std::size_t r = 0;
      for (int p : residual_positions) r = (r << 1) | bit_at(f, p);
      res[r] += std::conj(coeffs[t]) * amps_[f];
    }
    double p = 0.0;
    for (const auto& a : res) p += std::norm(a);
    residuals.push_back(std::move(res));
    probs.push_back(p);
  }

  const int outcome = rng.sample(probs);
  const double scale = 1.0 / std::sqrt(probs[outcome]);
  amps_ = std::move(residuals[outcome]);
  for (auto& a : amps_) a *= scale;

  std::vector<std::string> new_labels;
  for (int p : residual_positions) new_labels.push_back(labels_[p]);
  labels_ = std::move(new_labels);
  return outcome;
}

BellOutcome StateVector::bell_measure(std::string_view first,
                                      std::string_view second,
                                      RandomStream& rng) {
  const int pf = position_of(first);
  const int ps = position_of(second);
  std::vector<std::vector<Amplitude>> outcomes;
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < 2; ++x) outcomes.push_back(bell_coeffs(z, x));
  const int o = sample_projection({pf, ps}, outcomes, rng);
  return BellOutcome{o >> 1, o & 1};
}

MeasuredBit StateVector::measure_rotated(std::string_view label,
                                         Angle theta_tilde, RandomStream& rng) {
  const int p = position_of(label);
  const auto phase = theta_tilde.phase();
  std::vector<std::vector<Amplitude>> outcomes = {
      {kInvSqrt2, phase * kInvSqrt2},
      {kInvSqrt2, -phase * kInvSqrt2},
  };
  return MeasuredBit{sample_projection({p}, outcomes, rng)};
}

MeasuredBit StateVector::measure_computational(std::string_view label,
                                               RandomStream& rng) {
  const int p = position_of(label);
  std::vector<std::vector<Amplitude>> outcomes = {{1.0, 0.0}, {0.0, 1.0}};
  return MeasuredBit{sample_projection({p}, outcomes, rng)};
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count())
    throw std::logic_error("fidelity: qubit count mismatch");
  const int n = a.qubit_count();
  std::vector<int> perm(n);  // position in b of a's i-th label
  for (int i = 0; i < n; ++i) {
    const auto& l = a.labels()[i];
    auto it = std::find(b.labels().begin(), b.labels().end(), l);
    if (it == b.labels().end())
      throw std::logic_error("fidelity: label mismatch: " + l);
    perm[i] = static_cast<int>(it - b.labels().begin());
  }
  std::complex<double> inner = 0.0;
  const std::size_t dim = a.amplitudes().size();
  for (std::size_t ia = 0; ia < dim; ++ia) {
    std::size_t ib = 0;
    for (int i = 0; i < n; ++i) {
      const int bit = static_cast<int>((ia >> (n - 1 - i)) & 1u);
      ib |= static_cast<std::size_t>(bit) << (n - 1 - perm[i]);
    }
    inner += std::conj(a.amplitudes()[ia]) * b.amplitudes()[ib];
  }
  return std::norm(inner);
}

}  // namespace bqc
