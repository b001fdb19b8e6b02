#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bqc {

// FNV-1a over a tag string, mixed with a base seed. Used to derive
// independent per-party / per-purpose streams from one master seed so
// that adversary activity never shifts the honest parties' draws.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

// Seeded random stream; the only source of randomness in the simulator.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  int bit() { return static_cast<int>(engine_() & 1u); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(engine_);
  }

  double uniform01() {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    return dist(engine_);
  }

  // Samples an index with the given (already normalized) probabilities.
  template <typename Container>
  int sample(const Container& probs) {
    double u = uniform01();
    double acc = 0.0;
    int last = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      last = static_cast<int>(i);
      if (u < acc) return last;
    }
    return last;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bqc
