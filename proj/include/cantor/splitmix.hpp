#pragma once

#include <cstdint>

namespace cantor {

// Counter-based generator: keyed(seed, stream) opens an independent
// substream, so per-block sampling is order-free yet bit-reproducible.
struct SplitMix64 {
  std::uint64_t state = 0;

  static SplitMix64 keyed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g{seed + 0x9E3779B97F4A7C15ULL * (stream + 1)};
    g.next();
    return g;
  }

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

}  // namespace cantor
