// Deterministic seeded RNG with labeled substreams.
//
// splitmix64 is the engine everywhere so that results are identical across
// platforms and worker counts.  Module substreams derive their seed from the
// root seed and a label, so any stage can be re-run in isolation.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pla/fixed_real.hpp"

namespace pla {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1p-53; }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Substream seed for a module label; one extra mix decorrelates nearby roots.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
  SplitMix64 g(root ^ fnv1a64(label));
  g.next();
  return g.next();
}

// Uniform FixedReal in [0, 1) with full fractional entropy (every one of the
// fbits fraction bits is random).
inline FixedReal random_unit_fixed(SplitMix64& rng, int fbits = kDefaultFracBits) {
  int words = (fbits + 63) / 64;
  BigInt m = 0;
  for (int i = 0; i < words; ++i) m = (m << 64) | BigInt(rng.next());
  int extra = words * 64 - fbits;
  if (extra > 0)
    m >>= static_cast<unsigned>(extra);
  return FixedReal::from_mantissa(std::move(m), fbits);
}

}  // namespace pla
