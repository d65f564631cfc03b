#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "baire/hat.hpp"
#include "baire/metric.hpp"
#include "baire/point_stream.hpp"
#include "baire/rng.hpp"

using namespace baire;

TEST_CASE("symbol_at on the basic stream kinds") {
  CHECK(symbol_at(constant_stream(0), 7) == 0);
  CHECK(symbol_at(periodic_stream({0, 1}), 3) == 1);
  CHECK(symbol_at(hat_encode(constant_stream(0), 2), 1) == 2);
}

TEST_CASE("repeated queries are stable and fill matches at") {
  PointStream p = seeded_two_symbol_stream(2, 3, 12345);
  for (std::uint64_t i : {0ULL, 1ULL, 17ULL, 4096ULL, 100000ULL})
    CHECK(p.at(i) == p.at(i));
  Word pre = p.prefix(300);
  for (std::uint64_t i = 0; i < 300; ++i) CHECK(pre[i] == p.at(i));
}

TEST_CASE("shift basics") {
  CHECK(prefixes_equal(shift(constant_stream(0), 5), constant_stream(0), 64));
  CHECK(prefixes_equal(shift(periodic_stream({0, 1}), 1),
                       periodic_stream({1, 0}), 64));
  CHECK(shift(periodic_stream({4, 5}), 0).at(0) == 4);
}

TEST_CASE("shift composes additively on tested prefixes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    PointStream x = seeded_two_symbol_stream(0, 9, rng());
    const std::uint64_t a = rng() % 50, b = rng() % 50;
    CHECK(prefixes_equal(shift(shift(x, a), b), shift(x, a + b), 256));
  }
}

TEST_CASE("lcp_length") {
  PointStream x = file_backed_stream({0, 1, 2, 9, 9, 9, 9, 9, 9, 9, 9, 9});
  PointStream y = file_backed_stream({0, 1, 3, 9, 9, 9, 9, 9, 9, 9, 9, 9});
  CHECK(lcp_length(x, y, 10) == 2);
  CHECK_FALSE(lcp_length(periodic_stream({5}), constant_stream(5), 16));
  CHECK(lcp_length(constant_stream(1), constant_stream(2), 4) == 0);
}

TEST_CASE("metric distance semantics") {
  auto d0 = metric_distance(constant_stream(1), constant_stream(2), 8);
  REQUIRE(d0.exponent.has_value());
  CHECK(*d0.exponent == 0);  // distance 1

  PointStream x = file_backed_stream({0, 1, 7, 0});
  PointStream y = file_backed_stream({0, 1, 8, 0});
  auto d2 = metric_distance(x, y, 4);
  REQUIRE(d2.exponent.has_value());
  CHECK(*d2.exponent == 2);  // distance 1/4

  auto dcap = metric_distance(constant_stream(3), constant_stream(3), 20);
  CHECK(dcap.at_least_cap());
  CHECK_THROWS(metric_distance(x, y, 0));
}

TEST_CASE("metric properties: symmetry, self-distance, ultrametric") {
  std::mt19937_64 rng(11);
  const std::uint64_t cap = 64;
  for (int trial = 0; trial < 200; ++trial) {
    PointStream x = seeded_two_symbol_stream(0, 1, rng());
    PointStream y = seeded_two_symbol_stream(0, 1, rng());
    PointStream z = seeded_two_symbol_stream(0, 1, rng());
    auto dxy = metric_distance(x, y, cap);
    auto dyx = metric_distance(y, x, cap);
    CHECK(dxy.exponent == dyx.exponent);
    CHECK(metric_distance(x, x, cap).at_least_cap());
    auto dyz = metric_distance(y, z, cap);
    auto dxz = metric_distance(x, z, cap);
    if (dxy.exponent && dyz.exponent && dxz.exponent) {
      // d(x,z) <= max(d(x,y), d(y,z)): exponents reversed
      CHECK(*dxz.exponent >= std::min(*dxy.exponent, *dyz.exponent));
    }
  }
}

TEST_CASE("distance below threshold iff lcp exceeds it") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    PointStream x = seeded_two_symbol_stream(0, 1, rng());
    PointStream y = seeded_two_symbol_stream(0, 1, rng());
    const std::uint64_t cap = 128, t = rng() % 16;
    auto lcp = lcp_length(x, y, cap);
    if (!lcp) continue;
    const bool below = *lcp > t;  // d = 2^-lcp < 2^-t
    CHECK(below == (*lcp >= t + 1));
  }
}

TEST_CASE("cylinder membership") {
  CHECK(cylinder_contains({}, seeded_two_symbol_stream(0, 1, 1)));
  CHECK(cylinder_contains({0, 1}, periodic_stream({0, 1})));
  CHECK_FALSE(cylinder_contains({0, 1}, file_backed_stream({0, 2, 0})));
}

TEST_CASE("disagreement witness") {
  PointStream x = file_backed_stream({4, 4, 5, 4});
  PointStream y = file_backed_stream({4, 4, 4, 4});
  CHECK(disagreement_witness(x, y, 4) == 2);
  CHECK_FALSE(disagreement_witness(x, x, 4));
}

TEST_CASE("file-backed streams are bounded and say so") {
  PointStream p = file_backed_stream({1, 2, 3});
  CHECK(p.bounded_length() == 3);
  CHECK_THROWS_AS(p.at(3), std::out_of_range);
}

TEST_CASE("prefix dump round trip with comments") {
  PointStream p = periodic_stream({10, 0, 7});
  std::ostringstream os;
  write_prefix(os, p, 50, "kind=periodic");
  std::istringstream is(os.str());
  auto symbols = read_prefix(is);
  REQUIRE(symbols.size() == 50);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(symbols[i] == p.at(i));
}

TEST_CASE("prefix dump rejects malformed tokens with a line number") {
  std::istringstream is("1 2 3\nx 4\n");
  CHECK_THROWS_WITH_AS(read_prefix(is), doctest::Contains("line 2"),
                       std::invalid_argument);
}

TEST_CASE("hat encoding layout") {
  PointStream x = constant_stream(0);
  PointStream hx = hat_encode(x, 2);
  const Word expected{0, 2, 0, 0, 2, 0, 0, 0, 2};
  CHECK(hx.prefix(9) == expected);
  for (std::uint64_t j : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL}) {
    const std::uint64_t pos = block_terminator_position(j);
    CHECK(hx.at(pos) == 2);
  }
  CHECK(block_terminator_position(0) == 1);
  CHECK(block_terminator_position(1) == 4);
  CHECK(block_terminator_position(2) == 8);
  CHECK(block_terminator_position(3) == 13);
  CHECK(block_terminator_position(4) == 19);
}

TEST_CASE("hat encoding is deterministic in the base") {
  PointStream x = seeded_two_symbol_stream(3, 4, 99);
  PointStream y = seeded_two_symbol_stream(3, 4, 99);
  CHECK(prefixes_equal(hat_encode(x, 9), hat_encode(y, 9), 4096));
}

TEST_CASE("hat position decode agrees with replay") {
  PointStream base = seeded_two_symbol_stream(5, 6, 31337);
  PointStream hat = hat_encode(base, 7);
  std::uint64_t idx = 0;
  for (std::uint64_t block = 0; block < 60; ++block) {
    for (std::uint64_t off = 0; off <= block; ++off)
      CHECK(hat.at(idx++) == base.at(off));
    CHECK(hat.at(idx++) == 7);
  }
  for (std::uint64_t i : {100000ULL, 123456789ULL, 1000000007ULL}) {
    auto pos = hat_position(i);
    CHECK(triangular_block_start(pos.block) + pos.offset == i);
    CHECK(pos.offset <= pos.block + 1);
  }
}
