#include "baire/metric.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace baire {

double DyadicDistance::approx() const {
  return std::ldexp(1.0, -static_cast<int>(exponent.value_or(cap)));
}

std::optional<std::uint64_t> lcp_length(const PointStream& x,
                                        const PointStream& y,
                                        std::uint64_t cap) {
  return disagreement_witness(x, y, cap);
}

DyadicDistance metric_distance(const PointStream& x, const PointStream& y,
                               std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("metric_distance: cap must be >= 1");
  return DyadicDistance{lcp_length(x, y, cap), cap};
}

bool cylinder_contains(const Word& w, const PointStream& x) {
  constexpr std::size_t kChunk = 4096;
  Symbol buf[kChunk];
  std::size_t done = 0;
  while (done < w.size()) {
    const std::size_t len = std::min(kChunk, w.size() - done);
    x.fill(done, std::span<Symbol>(buf, len));
    if (!std::equal(buf, buf + len, w.begin() + done)) return false;
    done += len;
  }
  return true;
}

std::optional<std::uint64_t> disagreement_witness(const PointStream& x,
                                                  const PointStream& y,
                                                  std::uint64_t cap) {
  constexpr std::size_t kChunk = 8192;
  Symbol bx[kChunk], by[kChunk];
  std::uint64_t done = 0;
  while (done < cap) {
    const std::size_t len =
        static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, cap - done));
    x.fill(done, std::span<Symbol>(bx, len));
    y.fill(done, std::span<Symbol>(by, len));
    for (std::size_t i = 0; i < len; ++i)
      if (bx[i] != by[i]) return done + i;
    done += len;
  }
  return std::nullopt;
}

}  // namespace baire
