#pragma once

#include <cstdint>

#include "baire/point_stream.hpp"

namespace baire {

/// The hat encoding of a point x with marker symbol K is the stream
///
///   x_0 K  x_0 x_1 K  x_0 x_1 x_2 K  ...
///
/// Block k (0-based) carries x_0..x_k followed by K and has length k + 2,
/// so every base symbol and the marker recur in every later block. The same
/// triangular geometry also drives the selector-slot layout of the
/// bounded-type construction, so the index arithmetic lives here.

/// First index of block k: k(k+3)/2.
std::uint64_t triangular_block_start(std::uint64_t k);

/// The block containing index i (largest k with block_start(k) <= i).
std::uint64_t triangular_block_of(std::uint64_t i);

/// Index of block j's terminator: (j+1)(j+4)/2 - 1.
std::uint64_t block_terminator_position(std::uint64_t j);

/// Decomposes a hat index into (block, offset). Offsets 0..block carry base
/// symbols; offset block+1 is the terminator.
struct HatPosition {
  std::uint64_t block;
  std::uint64_t offset;
  bool is_terminator;
};
HatPosition hat_position(std::uint64_t i);

/// Random access into the encoding never replays the stream: each query
/// resolves its block arithmetically.
PointStream hat_encode(const PointStream& base, Symbol K);

}  // namespace baire
