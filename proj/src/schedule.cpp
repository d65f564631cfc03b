#include "baire/schedule.hpp"

#include <stdexcept>

namespace baire {

const char* schedule_variant_name(ScheduleVariant v) {
  switch (v) {
    case ScheduleVariant::sft_cylinder: return "sft_cylinder";
    case ScheduleVariant::dense: return "dense";
    case ScheduleVariant::sbt: return "sbt";
  }
  return "unknown";
}

Schedule::Schedule(ScheduleVariant v, std::uint64_t word_len, BigInt multiplier)
    : variant_(v), word_len_(word_len), multiplier_(std::move(multiplier)) {
  s_.push_back(BigInt(1));  // s_0 = 1 in every variant
  BigInt m0;
  switch (variant_) {
    case ScheduleVariant::sft_cylinder:
      m0 = BigInt(1) + word_len_ + s_[0];
      break;
    case ScheduleVariant::dense:
      m0 = s_[0];
      break;
    case ScheduleVariant::sbt:
      m0 = multiplier_ * s_[0];
      break;
  }
  m_.push_back(std::move(m0));
}

std::shared_ptr<const Schedule> Schedule::sft_cylinder(std::uint64_t word_len) {
  return std::shared_ptr<const Schedule>(
      new Schedule(ScheduleVariant::sft_cylinder, word_len, BigInt(1)));
}

std::shared_ptr<const Schedule> Schedule::dense() {
  return std::shared_ptr<const Schedule>(
      new Schedule(ScheduleVariant::dense, 0, BigInt(1)));
}

std::shared_ptr<const Schedule> Schedule::sbt(const BigInt& M) {
  if (M < 1) throw std::invalid_argument("sbt schedule needs M >= 1");
  return std::shared_ptr<const Schedule>(
      new Schedule(ScheduleVariant::sbt, 0, M));
}

void Schedule::ensure(std::uint64_t j) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (s_.size() <= j) {
    const std::uint64_t next = s_.size();  // computing s_next, m_next
    BigInt s_next = pow2(next) * m_.back();
    if (variant_ == ScheduleVariant::sbt) s_next *= multiplier_;
    BigInt m_next = m_.back() + (variant_ == ScheduleVariant::sbt
                                     ? multiplier_ * s_next
                                     : s_next);
    s_.push_back(std::move(s_next));
    m_.push_back(std::move(m_next));
  }
}

BigInt Schedule::s(std::uint64_t j) const {
  ensure(j);
  std::lock_guard<std::mutex> lock(mu_);
  return s_[j];
}

BigInt Schedule::m(std::uint64_t j) const {
  ensure(j);
  std::lock_guard<std::mutex> lock(mu_);
  return m_[j];
}

BigInt SegmentLayout::end(std::uint64_t j) const {
  if (schedule->variant() == ScheduleVariant::sft_cylinder)
    return schedule->m(j);  // m already counts the w K prefix
  return BigInt(prefix_len) + schedule->m(j);
}

BigInt SegmentLayout::begin(std::uint64_t j) const {
  return j == 0 ? BigInt(prefix_len) : end(j - 1);
}

SegmentLayout::Location SegmentLayout::locate(std::uint64_t i) const {
  if (i < prefix_len)
    throw std::invalid_argument("locate: index inside the prefix");
  const BigInt target(i);
  std::uint64_t lo = 0;
  while (end(lo) <= target) ++lo;  // segments grow ~quadratically; few steps
  const BigInt b = begin(lo);
  return Location{lo, to_u64(target - b)};
}

}  // namespace baire
