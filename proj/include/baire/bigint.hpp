#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace baire {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::uint64_t e) { return BigInt(1) << e; }

inline BigInt factorial(std::uint64_t k) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("value does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

inline double rat_to_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace baire
