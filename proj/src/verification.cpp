#include "baire/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include "baire/metric.hpp"
#include "baire/rng.hpp"

namespace baire {

namespace {

constexpr std::uint64_t kLaneSftX = 1, kLaneSftY = 2;
constexpr std::uint64_t kLaneDenseX = 3, kLaneDenseY = 4;
constexpr std::uint64_t kLaneSelectorX = 5, kLaneSelectorY = 6;
constexpr std::uint64_t kLaneLemmaX = 7, kLaneLemmaY = 8;
constexpr std::uint64_t kLaneDensity = 9;

std::vector<std::uint64_t> ordinal_range(std::uint64_t max_ordinal) {
  std::vector<std::uint64_t> js(max_ordinal + 1);
  for (std::uint64_t j = 0; j <= max_ordinal; ++j) js[j] = j;
  return js;
}

}  // namespace

bool SftVerification::all_satisfied() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairResult& p) {
    return p.outcome.all_satisfied();
  });
}

SftPair make_sft_verification_pair(const SubshiftSpec& spec, const Word& w,
                                   std::uint64_t rng_seed,
                                   std::uint64_t pair_index) {
  const Symbol K = compute_safe_symbol_K(spec.basis());
  PointStream bx = seeded_two_symbol_stream(
      K, K + 1, subseed(rng_seed, kLaneSftX, pair_index), Word{K, K, K});
  PointStream by = seeded_two_symbol_stream(
      K, K + 1, subseed(rng_seed, kLaneSftY, pair_index), Word{K, K, K + 1});
  SftMember mx = make_sft_member(spec, w, std::move(bx));
  SftMember my = make_sft_member(spec, w, std::move(by));
  SlotSequences slots = hat_slot_sequences(mx.hat, my.hat);
  return SftPair{std::move(mx), std::move(my), std::move(slots)};
}

SftVerification verify_sft_family(const SubshiftSpec& spec, const Word& w,
                                  std::uint64_t q, std::uint64_t max_ordinal,
                                  const BigInt& budget, std::uint64_t num_pairs,
                                  std::uint64_t rng_seed) {
  SftVerification out;
  out.K = compute_safe_symbol_K(spec.basis());
  for (std::uint64_t i = 0; i < num_pairs; ++i) {
    SftPair pair = make_sft_verification_pair(spec, w, rng_seed, i);
    CheckpointSpecification cps;
    cps.variant = ScheduleVariant::sft_cylinder;
    cps.schedule = pair.x.schedule;
    cps.w_len = w.size();
    cps.lower_window = q;
    cps.nu_slots = pair.slots.shared;
    cps.mu_slots = pair.slots.differing;
    cps.ordinals = ordinal_range(max_ordinal);
    cps.budget = budget;
    out.pairs.push_back(
        {i, checkpoint_verify(pair.x.point, pair.y.point, cps)});
  }
  return out;
}

const char* dense_pair_shape_name(DensePairShape s) {
  switch (s) {
    case DensePairShape::shared_prefix_same_family:
      return "shared-prefix-same-family";
    case DensePairShape::disjoint_same_length:
      return "disjoint-same-length";
    case DensePairShape::shared_prefix_mixed_length:
      return "shared-prefix-mixed-length";
    case DensePairShape::disjoint_mixed_length:
      return "disjoint-mixed-length";
  }
  return "unknown";
}

bool DenseVerification::all_satisfied() const {
  bool ok = std::all_of(pairs.begin(), pairs.end(), [](const PairResult& p) {
    return p.outcome.all_satisfied();
  });
  ok = ok && std::all_of(prefix_checks.begin(), prefix_checks.end(),
                         [](const PrefixCheck& c) { return c.starts_with_word; });
  ok = ok && std::all_of(density_checks.begin(), density_checks.end(),
                         [](const DensityCheck& c) {
                           return c.within_two_to_minus_p;
                         });
  return ok;
}

namespace {

// Smallest h > g whose base alphabet {r_h, r_h+q} misses {r_g, r_g+p}.
std::uint64_t disjoint_family_index(Symbol K, std::uint64_t g, std::uint64_t p,
                                    std::uint64_t q) {
  for (std::uint64_t h = g + 1;; ++h) {
    const Symbol a0 = 2 * (K + g), a1 = a0 + p;
    const Symbol b0 = 2 * (K + h), b1 = b0 + q;
    if (a0 != b0 && a0 != b1 && a1 != b0 && a1 != b1) return h;
  }
}

DenseMember seeded_dense_member(const SubshiftSpec& spec, std::uint64_t p,
                                std::uint64_t g, std::uint64_t seed,
                                Word forced) {
  const Symbol K = compute_safe_symbol_K(spec.basis());
  const Symbol lo = 2 * (K + g), hi = lo + p;
  return make_dense_member(spec, p, g,
                           seeded_two_symbol_stream(lo, hi, seed, forced));
}

CheckpointOutcome run_dense_pair(const DenseMember& x, const DenseMember& y,
                                 std::uint64_t t_window,
                                 std::uint64_t max_ordinal,
                                 const BigInt& budget) {
  const DenseMember& longer = x.p >= y.p ? x : y;
  const DenseMember& shorter = x.p >= y.p ? y : x;
  CheckpointSpecification cps;
  cps.variant = ScheduleVariant::dense;
  cps.schedule = longer.schedule;
  cps.p_eval = longer.p;
  cps.a_shift = longer.p - shorter.p;
  cps.lower_window = t_window;
  SlotSequences slots = hat_slot_sequences(longer.hat, shorter.hat);
  cps.nu_slots = slots.shared;
  cps.mu_slots = slots.differing;
  cps.ordinals = ordinal_range(max_ordinal);
  cps.budget = budget;
  return checkpoint_verify(longer.point, shorter.point, cps);
}

}  // namespace

DenseVerification verify_dense_family(const SubshiftSpec& spec,
                                      std::uint64_t p_max, std::uint64_t g_max,
                                      std::uint64_t t_window,
                                      std::uint64_t max_ordinal,
                                      const BigInt& budget,
                                      std::uint64_t rng_seed) {
  DenseVerification out;
  const Symbol K = compute_safe_symbol_K(spec.basis());
  out.K = K;

  // (a) every family member starts with its defining word.
  for (std::uint64_t p = 1; p <= p_max; ++p)
    for (std::uint64_t g = 0; g <= g_max; ++g) {
      const Symbol lo = 2 * (K + g);
      DenseMember member = seeded_dense_member(
          spec, p, g, subseed(rng_seed, kLaneDenseX, p * 100 + g),
          Word{lo, lo + p});
      out.prefix_checks.push_back(
          {p, g, cylinder_contains(member.w, member.point)});
    }

  // (b) members built from a periodic point's prefix stay 2^-p close to it.
  {
    std::vector<Word> candidates = {
        Word{K},       Word{K + 1},    Word{0, K},
        Word{K, K + 1}, Word{0, 0, K}, Word{0, K, K + 1}};
    std::uint64_t idx = 0;
    for (const Word& period : candidates) {
      if (!periodic_point_in_shift(spec, period)) continue;
      PointStream z = periodic_stream(period);
      for (std::uint64_t p = 1; p <= 8; ++p) {
        Word prefix = z.prefix(p);
        auto g = allowed_word_index(spec, prefix, 1 << 20);
        if (!g) continue;  // enumeration scan cap; skip exotic prefixes
        const Symbol lo = 2 * (K + *g);
        DenseMember member = seeded_dense_member(
            spec, p, *g, subseed(rng_seed, kLaneDensity, idx++),
            Word{lo, lo + p});
        const DyadicDistance d = metric_distance(member.point, z, p + 1);
        const bool close = d.at_least_cap() || *d.exponent >= p;
        out.density_checks.push_back({period, p, *g, close});
      }
    }
  }

  // (c) checkpoint inequalities over the four pair shapes.
  std::uint64_t pair_seed = 0;
  for (std::uint64_t p = 1; p <= p_max; ++p) {
    const Symbol lo0 = 2 * K;  // r_0
    {  // same family, shared two-symbol prefix, forced to differ after it
      DenseMember x = seeded_dense_member(
          spec, p, 0, subseed(rng_seed, kLaneDenseX, pair_seed),
          Word{lo0, lo0, lo0, lo0 + p});
      DenseMember y = seeded_dense_member(
          spec, p, 0, subseed(rng_seed, kLaneDenseY, pair_seed),
          Word{lo0, lo0, lo0 + p, lo0});
      out.pairs.push_back({DensePairShape::shared_prefix_same_family, p, 0, p,
                           0, run_dense_pair(x, y, t_window, max_ordinal,
                                             budget)});
      ++pair_seed;
    }
    {  // same length, disjoint alphabets: every offset disagrees
      const std::uint64_t h = disjoint_family_index(K, 0, p, p);
      const Symbol loh = 2 * (K + h);
      DenseMember x = seeded_dense_member(
          spec, p, 0, subseed(rng_seed, kLaneDenseX, pair_seed),
          Word{lo0, lo0 + p});
      DenseMember y = seeded_dense_member(
          spec, p, h, subseed(rng_seed, kLaneDenseY, pair_seed),
          Word{loh, loh + p});
      out.pairs.push_back({DensePairShape::disjoint_same_length, p, 0, p, h,
                           run_dense_pair(x, y, t_window, max_ordinal,
                                          budget)});
      ++pair_seed;
    }
    {  // mixed lengths q = p+1, same family index: shared low symbol
      const std::uint64_t q = p + 1;
      DenseMember x = seeded_dense_member(
          spec, p, 0, subseed(rng_seed, kLaneDenseX, pair_seed),
          Word{lo0, lo0, lo0 + p, lo0});
      DenseMember y = seeded_dense_member(
          spec, q, 0, subseed(rng_seed, kLaneDenseY, pair_seed),
          Word{lo0, lo0, lo0 + q, lo0});
      out.pairs.push_back({DensePairShape::shared_prefix_mixed_length, p, 0, q,
                           0, run_dense_pair(x, y, t_window, max_ordinal,
                                             budget)});
      ++pair_seed;
    }
    {  // mixed lengths, disjoint alphabets
      const std::uint64_t q = p + 1;
      const std::uint64_t h = disjoint_family_index(K, 0, q, p);
      const Symbol loh = 2 * (K + h);
      DenseMember x = seeded_dense_member(
          spec, p, h, subseed(rng_seed, kLaneDenseX, pair_seed),
          Word{loh, loh + p});
      DenseMember y = seeded_dense_member(
          spec, q, 0, subseed(rng_seed, kLaneDenseY, pair_seed),
          Word{lo0, lo0 + q});
      out.pairs.push_back({DensePairShape::disjoint_mixed_length, p, h, q, 0,
                           run_dense_pair(x, y, t_window, max_ordinal,
                                          budget)});
      ++pair_seed;
    }
  }
  return out;
}

bool SbtVerification::all_satisfied() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairResult& p) {
    return p.outcome.all_satisfied() && p.witness_verified;
  });
}

SbtVerification verify_sbt_family(const SubshiftSpec& spec,
                                  const Word& z_period, const Word& x_period,
                                  const Word& y_period, std::uint64_t R,
                                  std::uint64_t max_ordinal,
                                  const BigInt& budget, std::uint64_t num_pairs,
                                  std::uint64_t rng_seed) {
  SbtSeedData seed = make_sbt_seed(spec, z_period, x_period, y_period);
  SbtVerification out;
  out.p = seed.p;
  out.q = seed.q;
  out.r = seed.r;
  out.A = seed.A;
  out.B = seed.B;
  out.C = seed.C;
  out.M = seed.M;
  out.theta = seed.theta;
  out.a = seed.a;

  for (std::uint64_t i = 0; i < num_pairs; ++i) {
    PointStream alpha = seeded_two_symbol_stream(
        0, 1, subseed(rng_seed, kLaneSelectorX, i));
    const bool bit0_differs = (i % 2) == 1;
    // Shared bit 0 makes the small shared slots checkable; a flipped bit 0
    // makes the first differing slot the earliest feasible one.
    Word forced;
    if (bit0_differs) {
      forced = {1 - alpha.at(0)};
    } else {
      forced = {alpha.at(0), 1 - alpha.at(1)};
    }
    PointStream beta = seeded_two_symbol_stream(
        0, 1, subseed(rng_seed, kLaneSelectorY, i), forced);

    SbtMember mx = make_sbt_member(seed, alpha);
    SbtMember my = make_sbt_member(seed, beta);

    CheckpointSpecification cps;
    cps.variant = ScheduleVariant::sbt;
    cps.schedule = seed.schedule;
    cps.lower_window = R;
    SlotSequences slots = sbt_slot_sequences(mx.selector, my.selector);
    cps.nu_slots = slots.shared;
    cps.mu_slots = slots.differing;
    cps.ordinals = ordinal_range(max_ordinal);
    cps.budget = budget;
    CheckpointOutcome outcome = checkpoint_verify(mx.point, my.point, cps);

    auto witness = sbt_pair_witness(seed, mx, my);
    bool verified = false;
    if (witness && fits_u64(witness->index)) {
      const std::uint64_t w = to_u64(witness->index);
      verified = mx.point.at(w) != my.point.at(w) &&
                 (w == 0 || mx.point.at(w - 1) == my.point.at(w - 1));
    }
    out.pairs.push_back(
        {bit0_differs, std::move(outcome), witness.value_or(ConstructedWitness{}),
         verified});
  }
  return out;
}

LemmaTrials distinctness_trials(Symbol K, std::uint64_t g, std::uint64_t h,
                                std::uint64_t p, std::uint64_t q,
                                std::uint64_t trials, std::uint64_t rng_seed,
                                std::uint64_t cap) {
  if (p == 0 || q == 0)
    throw std::invalid_argument("distinctness trials need p, q >= 1");
  if (!(p != q || g != h))
    throw std::invalid_argument(
        "distinctness holds only for g != h (same p) or p != q");
  LemmaTrials out;
  out.trials = trials;
  const Symbol lox = 2 * (K + g), hix = lox + p;
  const Symbol loy = 2 * (K + h), hiy = loy + q;
  for (std::uint64_t i = 0; i < trials; ++i) {
    PointStream x = seeded_two_symbol_stream(
        lox, hix, subseed(rng_seed, kLaneLemmaX, i), Word{lox, hix});
    PointStream y = seeded_two_symbol_stream(
        loy, hiy, subseed(rng_seed, kLaneLemmaY, i), Word{loy, hiy});
    if (auto gamma = disagreement_witness(x, y, cap)) {
      ++out.witnesses;
      out.max_gamma = std::max(out.max_gamma, *gamma);
    }
  }
  return out;
}

}  // namespace baire
