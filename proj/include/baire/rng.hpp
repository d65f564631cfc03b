#pragma once

#include <cstdint>

namespace baire {

/// SplitMix64 finalizer. Stateless, so a stream value at index i can be
/// produced without replaying indices 0..i-1.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent lane seed from a root seed. All randomness in a
/// run flows from one recorded root through this, so any output can be
/// replayed from the root seed alone.
inline std::uint64_t subseed(std::uint64_t root, std::uint64_t lane,
                             std::uint64_t index = 0) {
  return mix64(mix64(root ^ (lane * 0xd1342543de82ef95ULL)) + index);
}

/// Deterministic bit at position i for a given seed.
inline bool seeded_bit(std::uint64_t seed, std::uint64_t i) {
  return (mix64(seed + i * 0x9e3779b97f4a7c15ULL) & 1u) != 0;
}

}  // namespace baire
