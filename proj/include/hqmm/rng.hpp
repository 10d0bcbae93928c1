#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hqmm {

// Seeded RNG with a portable uniform-double mapping, so that a fixed seed
// produces the same draws on every platform (std::uniform_real_distribution
// and std::discrete_distribution are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1), 53 random bits
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // index drawn proportionally to the (nonnegative) weights
  int categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniform() * total;
    double acc = 0.0;
    int last_positive = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] <= 0.0) continue;
      last_positive = static_cast<int>(k);
      acc += weights[k];
      if (u < acc) return last_positive;
    }
    return last_positive;  // roundoff fell off the end
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hqmm
