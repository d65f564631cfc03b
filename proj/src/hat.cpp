#include "baire/hat.hpp"

#include <cmath>
#include <stdexcept>

namespace baire {

namespace {

// Exact floor(sqrt(v)); v stays below 2^67 here (v = 9 + 8i).
std::uint64_t isqrt_u128(unsigned __int128 v) {
  std::uint64_t r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(v)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::uint64_t triangular_block_start(std::uint64_t k) {
  return k * (k + 3) / 2;
}

std::uint64_t triangular_block_of(std::uint64_t i) {
  // Largest k with k(k+3)/2 <= i, i.e. k = floor((-3 + sqrt(9 + 8i)) / 2).
  unsigned __int128 d = 9 + static_cast<unsigned __int128>(8) * i;
  std::uint64_t k = (isqrt_u128(d) - 3) / 2;
  while (triangular_block_start(k + 1) <= i) ++k;
  while (k > 0 && triangular_block_start(k) > i) --k;
  return k;
}

std::uint64_t block_terminator_position(std::uint64_t j) {
  return (j + 1) * (j + 4) / 2 - 1;
}

HatPosition hat_position(std::uint64_t i) {
  const std::uint64_t k = triangular_block_of(i);
  const std::uint64_t off = i - triangular_block_start(k);
  return HatPosition{k, off, off == k + 1};
}

namespace {

struct HatStream final : PointStream::Impl {
  PointStream base;
  Symbol marker;
  HatStream(PointStream b, Symbol k) : base(std::move(b)), marker(k) {}
  Symbol at(std::uint64_t i) const override {
    const HatPosition pos = hat_position(i);
    return pos.is_terminator ? marker : base.at(pos.offset);
  }
  StreamKind kind() const override { return StreamKind::encoded_scrambled; }
};

}  // namespace

PointStream hat_encode(const PointStream& base, Symbol K) {
  return PointStream(std::make_shared<HatStream>(base, K));
}

}  // namespace baire
