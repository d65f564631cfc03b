#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "baire/chaos_stats.hpp"
#include "baire/constructions.hpp"
#include "baire/point_stream.hpp"

using namespace baire;

namespace {

// Brute-force double-loop oracle for the window count.
std::uint64_t xi_oracle(const PointStream& x, const PointStream& y,
                        std::uint64_t t, std::uint64_t n, XiPredicate mode) {
  const std::uint64_t T = mode == XiPredicate::strict_metric ? t + 1 : t;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    bool agree = true;
    for (std::uint64_t k = 0; k < T && agree; ++k)
      agree = x.at(i + k) == y.at(i + k);
    count += agree;
  }
  return count;
}

PointStream random_stream(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: {
      Word period(1 + rng() % 6);
      for (auto& s : period) s = rng() % 4;
      return periodic_stream(period);
    }
    case 1:
      return constant_stream(rng() % 4);
    default:
      return seeded_two_symbol_stream(rng() % 3, 3, rng());
  }
}

}  // namespace

TEST_CASE("xi_count examples") {
  PointStream x = constant_stream(0);
  PointStream y = periodic_stream({0, 0, 0, 1});
  CHECK(xi_count(x, y, {2, 8, XiPredicate::window_agree}) == 4);
  CHECK(xi_count(x, x, {5, 123, XiPredicate::window_agree}) == 123);
  CHECK(xi_count(constant_stream(0), constant_stream(1),
                 {1, 50, XiPredicate::window_agree}) == 0);
}

TEST_CASE("window zero counts every shift") {
  PointStream x = constant_stream(0);
  PointStream y = constant_stream(1);
  CHECK(xi_count(x, y, {0, 17, XiPredicate::window_agree}) == 17);
}

TEST_CASE("xi_count matches the oracle") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 300; ++trial) {
    PointStream x = random_stream(rng);
    PointStream y = rng() % 4 == 0 ? x : random_stream(rng);
    const std::uint64_t t = rng() % 9;
    const std::uint64_t n = 1 + rng() % 400;
    const XiPredicate mode = rng() % 2 ? XiPredicate::window_agree
                                       : XiPredicate::strict_metric;
    CHECK(xi_count(x, y, {t, n, mode}) == xi_oracle(x, y, t, n, mode));
  }
}

TEST_CASE("xi_count_multi matches repeated single counts") {
  std::mt19937_64 rng(516);
  PointStream x = random_stream(rng);
  PointStream y = random_stream(rng);
  const std::vector<std::uint64_t> ns{0, 1, 2, 17, 18, 100, 333};
  const auto multi = xi_count_multi(x, y, 3, XiPredicate::window_agree, ns);
  for (std::size_t i = 0; i < ns.size(); ++i)
    CHECK(multi[i] == xi_count(x, y, {3, ns[i], XiPredicate::window_agree}));
}

TEST_CASE("monotone in the window and in the prefix") {
  std::mt19937_64 rng(517);
  for (int trial = 0; trial < 60; ++trial) {
    PointStream x = random_stream(rng);
    PointStream y = random_stream(rng);
    const std::uint64_t t = rng() % 8, n = 50 + rng() % 200;
    CHECK(xi_count(x, y, {t + 1, n, XiPredicate::window_agree}) <=
          xi_count(x, y, {t, n, XiPredicate::window_agree}));
    const std::uint64_t n2 = n + rng() % 100;
    const auto c1 = xi_count(x, y, {t, n, XiPredicate::window_agree});
    const auto c2 = xi_count(x, y, {t, n2, XiPredicate::window_agree});
    CHECK(c2 >= c1);
    CHECK(c2 - c1 <= n2 - n);
  }
}

TEST_CASE("strict predicate equals window predicate one step up") {
  std::mt19937_64 rng(518);
  for (int trial = 0; trial < 60; ++trial) {
    PointStream x = random_stream(rng);
    PointStream y = random_stream(rng);
    const std::uint64_t t = rng() % 6, n = 1 + rng() % 300;
    CHECK(xi_count(x, y, {t, n, XiPredicate::strict_metric}) ==
          xi_count(x, y, {t + 1, n, XiPredicate::window_agree}));
  }
}

TEST_CASE("xi_ratio is exact and rejects n = 0") {
  CHECK(xi_ratio(BigInt(4), BigInt(8)) == BigRat(1, 2));
  CHECK(xi_ratio(BigInt(7), BigInt(7)) == 1);
  CHECK(xi_ratio(BigInt(0), BigInt(9)) == 0);
  CHECK_THROWS_AS(xi_ratio(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("bound formulas at hand-computed points") {
  auto sft = Schedule::sft_cylinder(1);
  CHECK(bound_sft_lower(1, 1, *sft) == BigRat(4, 9));
  CHECK(bound_sft_upper(1, 1, *sft) == BigRat(5, 9));
  CHECK(bound_sft_upper(1, 0, *sft) == BigRat(1, 3) + BigRat(1, 9));

  auto dense = Schedule::dense();
  CHECK(bound_dense_lower(2, 1, 1, 0, *dense) == BigRat(10, 17));
  CHECK(bound_dense_upper(2, 1, 0, *dense) == BigRat(5, 17));

  auto sbt = Schedule::sbt(BigInt(30));
  CHECK(bound_sbt_lower(1, 1, *sbt) ==
        BigRat(1800, 1801) - BigRat(2, 54030));
  CHECK(bound_sbt_upper(1, *sbt) == BigRat(1, 3) + BigRat(1, 1801));

  CHECK_THROWS_AS(bound_sft_lower(0, 1, *sft), std::invalid_argument);
}

TEST_CASE("bounds are exact values, not approximations") {
  auto sft = Schedule::sft_cylinder(3);
  for (std::uint64_t j = 1; j < 12; ++j) {
    CHECK(bound_sft_lower(j, 4, *sft) == bound_sft_lower(j, 4, *sft));
    CHECK(bound_sft_upper(j, 3, *sft) == bound_sft_upper(j, 3, *sft));
  }
}

TEST_CASE("bound monotonicity") {
  auto sft = Schedule::sft_cylinder(1);
  for (std::uint64_t j = 1; j < 10; ++j) {
    CHECK(bound_sft_lower(j + 1, 3, *sft) > bound_sft_lower(j, 3, *sft));
    CHECK(bound_sft_upper(j + 1, 1, *sft) < bound_sft_upper(j, 1, *sft));
  }
  auto dense = Schedule::dense();
  // growing misalignment strictly weakens the lower bound
  for (std::uint64_t a = 0; a < 5; ++a)
    CHECK(bound_dense_lower(3, 2, 2, a + 1, *dense) <
          bound_dense_lower(3, 2, 2, a, *dense));
  auto sbt = Schedule::sbt(BigInt(30));
  for (std::uint64_t j = 1; j < 6; ++j)
    CHECK(bound_sbt_lower(j + 1, 4, *sbt) > bound_sbt_lower(j, 4, *sbt));
  // a degenerate lower bound may be <= 0 and stays a valid bound
  CHECK(bound_sft_lower(1, 100, *sft) < 0);
}

TEST_CASE("checkpoint verification on a small cylinder pair") {
  SubshiftSpec spec(ForbiddenBasis({{0, 1}}));
  PointStream bx = seeded_two_symbol_stream(2, 3, 1001, {2, 2, 2});
  PointStream by = seeded_two_symbol_stream(2, 3, 1002, {2, 2, 3});
  SftMember mx = make_sft_member(spec, {0}, bx);
  SftMember my = make_sft_member(spec, {0}, by);

  CheckpointSpecification cps;
  cps.variant = ScheduleVariant::sft_cylinder;
  cps.schedule = mx.schedule;
  cps.w_len = 1;
  cps.lower_window = 3;
  auto slots = hat_slot_sequences(mx.hat, my.hat);
  cps.nu_slots = slots.shared;
  cps.mu_slots = slots.differing;
  cps.ordinals = {0, 1, 2, 3};
  cps.budget = BigInt(30000000);  // keeps the first differing slot (7) out

  auto outcome = checkpoint_verify(mx.point, my.point, cps);
  CHECK(outcome.all_satisfied());
  // ordinal 0 of the shared sequence is slot 0: below the bound domain
  bool saw_domain_skip = false;
  for (const auto& s : outcome.skipped)
    saw_domain_skip |= s.kind == CheckpointKind::lower_at_nu && s.ordinal == 0;
  CHECK(saw_domain_skip);
  // lower ordinals 1..3 land on slots 1..3 (shared prefix pins them)
  for (const auto& r : outcome.reports) {
    CHECK(r.kind == CheckpointKind::lower_at_nu);
    CHECK(r.slot == r.ordinal);
    CHECK(r.ratio >= r.bound);
  }
  CHECK(outcome.largest(CheckpointKind::upper_at_mu) == nullptr);
}

TEST_CASE("an early base disagreement makes small upper checkpoints land") {
  SubshiftSpec spec(ForbiddenBasis({{0, 1}}));
  PointStream bx = seeded_two_symbol_stream(2, 3, 1003, {2, 3});
  PointStream by = seeded_two_symbol_stream(2, 3, 1004, {2, 2});
  SftMember mx = make_sft_member(spec, {0}, bx);
  SftMember my = make_sft_member(spec, {0}, by);

  CheckpointSpecification cps;
  cps.variant = ScheduleVariant::sft_cylinder;
  cps.schedule = mx.schedule;
  cps.w_len = 1;
  cps.lower_window = 3;
  auto slots = hat_slot_sequences(mx.hat, my.hat);
  cps.nu_slots = slots.shared;
  cps.mu_slots = slots.differing;
  cps.ordinals = {0, 1};
  cps.budget = BigInt(1000000);

  auto outcome = checkpoint_verify(mx.point, my.point, cps);
  CHECK(outcome.all_satisfied());
  // bases differ first at offset 1, so the first differing slot is 3
  const auto* upper = outcome.largest(CheckpointKind::upper_at_mu);
  REQUIRE(upper != nullptr);
  CHECK(upper->slot == 3);
  CHECK(upper->n == mx.schedule->m(3));
  CHECK(upper->ratio <= upper->bound);
}

TEST_CASE("checkpoint verification refuses a pair with no differing slot") {
  SubshiftSpec spec(ForbiddenBasis({{0, 1}}));
  SftMember mx = make_sft_member(spec, {0}, constant_stream(2));
  CheckpointSpecification cps;
  cps.variant = ScheduleVariant::sft_cylinder;
  cps.schedule = mx.schedule;
  cps.ordinals = {1};
  cps.nu_slots = {1};
  cps.mu_slots = {};  // x = y
  CHECK_THROWS_AS(checkpoint_verify(mx.point, mx.point, cps),
                  std::invalid_argument);
}

TEST_CASE("budget skips produce the largest feasible fallback") {
  SubshiftSpec spec(ForbiddenBasis({{0, 1}}));
  PointStream bx = seeded_two_symbol_stream(2, 3, 2001, {2, 2, 2});
  PointStream by = seeded_two_symbol_stream(2, 3, 2002, {2, 2, 3});
  SftMember mx = make_sft_member(spec, {0}, bx);
  SftMember my = make_sft_member(spec, {0}, by);
  CheckpointSpecification cps;
  cps.variant = ScheduleVariant::sft_cylinder;
  cps.schedule = mx.schedule;
  cps.w_len = 1;
  cps.lower_window = 3;
  auto slots = hat_slot_sequences(mx.hat, my.hat);
  cps.nu_slots = slots.shared;
  cps.mu_slots = slots.differing;
  cps.ordinals = {6};      // asks for slot 6 (lower) and a huge mu slot
  cps.budget = BigInt(500000);  // m_6 is out of reach
  auto outcome = checkpoint_verify(mx.point, my.point, cps);
  // fallback lower: largest shared slot with m <= budget is slot 5
  const auto* lower = outcome.largest(CheckpointKind::lower_at_nu);
  REQUIRE(lower != nullptr);
  CHECK(lower->slot == 5);
  CHECK(lower->satisfied);
  // no differing slot fits this budget at all
  CHECK(outcome.largest(CheckpointKind::upper_at_mu) == nullptr);
  CHECK_FALSE(outcome.skipped.empty());
}

TEST_CASE("csv writer emits the pinned schema") {
  CheckpointReport r;
  r.kind = CheckpointKind::lower_at_nu;
  r.ordinal = 2;
  r.slot = 5;
  r.n = BigInt("227205");
  r.count = BigInt("227000");
  r.ratio = BigRat(BigInt("227000"), BigInt("227205"));
  r.bound = BigRat(1, 2);
  r.satisfied = true;
  std::ostringstream os;
  write_csv(os, {{"command", "test"}, {"rng_seed", "7"}}, {to_csv_row(r)});
  const std::string text = os.str();
  CHECK(text.find("# command=test\n") != std::string::npos);
  CHECK(text.find("# rng_seed=7\n") != std::string::npos);
  CHECK(text.find("n,count,ratio_num,ratio_den,ratio_float64,bound_num,"
                  "bound_den,kind,j,satisfied\n") != std::string::npos);
  CHECK(text.find("227205,227000,45400,45441,") != std::string::npos);
  CHECK(text.find("lower-at-nu,2,1") != std::string::npos);
}
