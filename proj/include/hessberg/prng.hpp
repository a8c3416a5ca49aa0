#ifndef HESSBERG_PRNG_HPP
#define HESSBERG_PRNG_HPP

#include <cstdint>
#include <random>
#include <string>

#include "hessberg/rational.hpp"

namespace hessberg {

// Deterministic PRNG for generic points and random test weights. mt19937_64
// has a pinned bit stream; the range mapping below is ours, so identical
// seeds give identical draws on every platform. Statistical bias of the
// modulo map is irrelevant here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long nonzero(long lo, long hi) {
    for (;;) {
      long v = uniform(lo, hi);
      if (v != 0) return v;
    }
  }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

/// Stable seed derivation for per-label sub-streams.
inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hessberg

#endif
