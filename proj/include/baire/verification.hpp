#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baire/chaos_stats.hpp"
#include "baire/constructions.hpp"
#include "baire/subshift.hpp"

namespace baire {

/// Corpus shaping note. Checkpoint evaluation lengths follow the schedule's
/// m_j, which roughly squares per step, so only small segment indices are
/// reachable under any symbol budget. Block terminators are shared between
/// any two constructed points, which pins where shared/differing segments
/// can sit. The verification corpora therefore pin the first base symbols:
///
///   - cylinder pairs agree on two leading safe symbols and are forced to
///     differ at the third, so the j-th shared checkpoint is segment j and
///     the first differing segment is 7 (the earliest one possible);
///   - dense "shared prefix" pairs do the same with the low base symbol;
///     "disjoint alphabet" pairs differ at every offset, which makes the
///     small differing checkpoints dense instead;
///   - selector pairs either share bit 0 (shared slots 0,1,2 feasible) or
///     differ there (differing slot 2 feasible).
///
/// Everything else about a base stream is seeded-random.

struct SftPair {
  SftMember x, y;
  SlotSequences slots;
};
SftPair make_sft_verification_pair(const SubshiftSpec& spec, const Word& w,
                                   std::uint64_t rng_seed,
                                   std::uint64_t pair_index);

struct SftVerification {
  struct PairResult {
    std::uint64_t pair_index;
    CheckpointOutcome outcome;
  };
  Symbol K = 0;
  std::vector<PairResult> pairs;
  bool all_satisfied() const;
};
SftVerification verify_sft_family(const SubshiftSpec& spec, const Word& w,
                                  std::uint64_t q, std::uint64_t max_ordinal,
                                  const BigInt& budget, std::uint64_t num_pairs,
                                  std::uint64_t rng_seed);

enum class DensePairShape {
  shared_prefix_same_family,   // same (p,g), bases agree on two symbols
  disjoint_same_length,        // p = q, g != h, disjoint alphabets
  shared_prefix_mixed_length,  // q = p+1, same g, shared low symbol
  disjoint_mixed_length,       // q = p+1, disjoint alphabets
};
const char* dense_pair_shape_name(DensePairShape s);

struct DenseVerification {
  struct PairResult {
    DensePairShape shape;
    std::uint64_t p, g, q, h;
    CheckpointOutcome outcome;
  };
  struct PrefixCheck {
    std::uint64_t p, g;
    bool starts_with_word;
  };
  struct DensityCheck {
    Word period;
    std::uint64_t p;
    std::uint64_t g;
    bool within_two_to_minus_p;
  };
  Symbol K = 0;
  std::vector<PairResult> pairs;
  std::vector<PrefixCheck> prefix_checks;
  std::vector<DensityCheck> density_checks;
  bool all_satisfied() const;
};
DenseVerification verify_dense_family(const SubshiftSpec& spec,
                                      std::uint64_t p_max, std::uint64_t g_max,
                                      std::uint64_t t_window,
                                      std::uint64_t max_ordinal,
                                      const BigInt& budget,
                                      std::uint64_t rng_seed);

struct SbtVerification {
  struct PairResult {
    bool bit0_differs;
    CheckpointOutcome outcome;
    ConstructedWitness witness;
    bool witness_verified;
  };
  std::uint64_t p = 0, q = 0, r = 0;
  BigInt A, B, C, M;
  std::uint64_t theta = 0;
  Word a;
  std::vector<PairResult> pairs;
  bool all_satisfied() const;
};
SbtVerification verify_sbt_family(const SubshiftSpec& spec,
                                  const Word& z_period, const Word& x_period,
                                  const Word& y_period, std::uint64_t R,
                                  std::uint64_t max_ordinal,
                                  const BigInt& budget, std::uint64_t num_pairs,
                                  std::uint64_t rng_seed);

/// The distinctness arguments, executed: draws non-constant streams over
/// {2(K+g), 2(K+g)+p} and {2(K+h), 2(K+h)+q} and scans for the promised
/// disagreement. Requires g != h with p = q, or p != q.
struct LemmaTrials {
  std::uint64_t trials = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t max_gamma = 0;
};
LemmaTrials distinctness_trials(Symbol K, std::uint64_t g, std::uint64_t h,
                                std::uint64_t p, std::uint64_t q,
                                std::uint64_t trials, std::uint64_t rng_seed,
                                std::uint64_t cap = 4096);

}  // namespace baire
