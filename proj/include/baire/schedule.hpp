#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "baire/bigint.hpp"

namespace baire {

enum class ScheduleVariant { sft_cylinder, dense, sbt };
const char* schedule_variant_name(ScheduleVariant v);

/// The growth schedules driving all three constructions. s_0 = 1 always;
/// the recurrences are evaluated lazily in exact integers:
///
///   sft_cylinder: m_j = 1 + |w| + sum_{n<=j} s_n,   s_{j+1} = 2^{j+1} m_j
///   dense:        m_j = sum_{n<=j} s_n,             s_{j+1} = 2^{j+1} m_j
///   sbt:          m_j = sum_{n<=j} M s_n,           s_{j+1} = 2^{j+1} M m_j
///
/// m is strictly increasing and roughly squares per step, so only a handful
/// of entries are ever reachable by a finite scan.
class Schedule {
 public:
  static std::shared_ptr<const Schedule> sft_cylinder(std::uint64_t word_len);
  static std::shared_ptr<const Schedule> dense();
  static std::shared_ptr<const Schedule> sbt(const BigInt& M);

  BigInt s(std::uint64_t j) const;
  BigInt m(std::uint64_t j) const;

  ScheduleVariant variant() const { return variant_; }
  std::uint64_t word_len() const { return word_len_; }
  const BigInt& block_multiplier() const { return multiplier_; }  // M (1 unless sbt)

 private:
  Schedule(ScheduleVariant v, std::uint64_t word_len, BigInt multiplier);
  void ensure(std::uint64_t j) const;

  ScheduleVariant variant_;
  std::uint64_t word_len_;
  BigInt multiplier_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> s_, m_;
};

/// Absolute positions of the construction's segments inside the emitted
/// point. prefix_len is the symbols before segment 0 (1+|w| for the
/// cylinder construction, p+1 for the dense family, 0 for the bounded-type
/// one). Note the cylinder schedule's m already includes its prefix.
struct SegmentLayout {
  std::shared_ptr<const Schedule> schedule;
  std::uint64_t prefix_len = 0;

  BigInt end(std::uint64_t j) const;    // one past segment j's last index
  BigInt begin(std::uint64_t j) const;  // segment j's first index

  struct Location {
    std::uint64_t segment;
    std::uint64_t offset;
  };
  /// Segment containing absolute index i (requires i >= prefix_len).
  Location locate(std::uint64_t i) const;
};

}  // namespace baire
