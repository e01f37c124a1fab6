#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ganstab/common.hpp"

namespace ganstab {

// Deterministic random source. The std distributions are implementation
// defined, so uniform/normal are generated here from raw mt19937_64 words
// to keep results identical for a given seed on any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1) with 53 random bits
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller, one value per call (the sine partner is discarded so the
  // stream position never depends on call history)
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643 * u2);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % n);
  }

  // Fisher-Yates; std::shuffle is not portable across standard libraries
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Named sub-stream seed so independent consumers never share a stream.
inline std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = fnv1a64(tag) ^ (seed + 0x9e3779b97f4a7c15ULL);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace ganstab
