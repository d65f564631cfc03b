#pragma once

#include <cstdint>
#include <optional>

#include "baire/point_stream.hpp"

namespace baire {

/// Distance value 2^(-exponent) under the Baire metric, observed at finite
/// precision. A missing exponent means the prefixes of length `cap` agree:
/// the true distance is at most 2^(-cap), and may be 0. The marker is never
/// coerced to an exact value.
struct DyadicDistance {
  std::optional<std::uint64_t> exponent;
  std::uint64_t cap = 0;

  bool at_least_cap() const { return !exponent.has_value(); }
  double approx() const;
};

/// Length of the longest common prefix, scanned up to `cap` symbols.
/// nullopt means the first `cap` symbols agree.
std::optional<std::uint64_t> lcp_length(const PointStream& x,
                                        const PointStream& y,
                                        std::uint64_t cap);

/// d(x, y) = 2^(-lcp) when the first disagreement lies below cap.
/// Requires cap >= 1.
DyadicDistance metric_distance(const PointStream& x, const PointStream& y,
                               std::uint64_t cap);

/// True iff x starts with w.
bool cylinder_contains(const Word& w, const PointStream& x);

/// Least index gamma < cap with x_gamma != y_gamma, if any.
std::optional<std::uint64_t> disagreement_witness(const PointStream& x,
                                                  const PointStream& y,
                                                  std::uint64_t cap);

}  // namespace baire
