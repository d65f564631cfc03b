#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "baire/bigint.hpp"
#include "baire/hat.hpp"
#include "baire/point_stream.hpp"
#include "baire/schedule.hpp"
#include "baire/subshift.hpp"

namespace baire {

std::shared_ptr<const Schedule> make_schedule(ScheduleVariant v,
                                              std::uint64_t word_len = 0,
                                              const BigInt& M = BigInt(1));

/// One member of the cylinder-set scrambled family:
///
///   x~ = w K u(x^_0,0) u(x^_1,1) ...      u(k,j) = k repeated s_j times
///
/// where x^ is the hat encoding of the base point. Segment j occupies
/// [m_{j-1}, m_j) with m_{-1} = 1+|w|.
struct SftMember {
  PointStream point;
  PointStream base;
  PointStream hat;
  Word w;
  Symbol K = 0;
  std::shared_ptr<const Schedule> schedule;
  SegmentLayout layout() const { return SegmentLayout{schedule, static_cast<std::uint64_t>(w.size()) + 1}; }
};

/// Builds the member for an allowed word w. Throws if w is forbidden.
SftMember make_sft_member(const SubshiftSpec& spec, const Word& w,
                          PointStream base);

/// One member of the dense family: the cylinder construction seeded with the
/// g-th allowed word of length p and a base over {r_g, r_g + p},
/// r_g = 2(K + g). Segment j occupies [p+1+m_{j-1}, p+1+m_j).
struct DenseMember {
  PointStream point;
  PointStream base;
  PointStream hat;
  Word w;
  std::uint64_t p = 0, g = 0;
  Symbol K = 0;
  Symbol r = 0;  // r_g
  std::shared_ptr<const Schedule> schedule;
  SegmentLayout layout() const { return SegmentLayout{schedule, p + 1}; }
};

/// Validates the base against {r_g, r_g+p} and rejects bases that look
/// constant within `certify_cap` symbols (constancy itself is not decidable
/// from finite data). Requires K >= 1: on the full shift the base alphabet
/// would collide with the safe symbol.
DenseMember make_dense_member(const SubshiftSpec& spec, std::uint64_t p,
                              std::uint64_t g, PointStream base,
                              std::uint64_t certify_cap = 1 << 16);

/// Seed data for the bounded-type construction, derived from three periodic
/// points z, x, y with primitive period words of lengths p < q < r that
/// agree on their first p symbols:
///
///   a = z_[0,p)   b = x_[p,pq)   c = y_[p,pr)
///   M = lcm(|a|, |ba|, |ca|),  A = M/|a|, B = M/|ba|, C = M/|ca|
///   I_0 = (ba)^B, I_1 = (ca)^C   (both of length M)
struct SbtSeedData {
  Word a, b, c;
  std::uint64_t p = 0, q = 0, r = 0;
  BigInt A, B, C, M;
  std::uint64_t M64 = 0;
  Symbol K = 0;  // max{L, N}
  Word I0, I1;
  std::uint64_t theta = 0;  // first offset where I0 and I1 disagree
  PointStream z, x, y;
  std::shared_ptr<const Schedule> schedule;
  SegmentLayout layout() const { return SegmentLayout{schedule, 0}; }
};

/// Validates every seed precondition: primitivity, p > K!, q > p, r > q,
/// prefix agreement, and that aba, cab, cac pass the basis check.
SbtSeedData make_sbt_seed(const SubshiftSpec& spec, const Word& z_period,
                          const Word& x_period, const Word& y_period);

/// phi(alpha): slot n carries u(I_{alpha_o}, n) for selector slots and
/// v(a, n) = a^{A s_n} for separator slots, laid out on the same triangular
/// geometry as the hat encoding ([a_0] a [a_0 a_1] a ...). Every slot has
/// length M s_n; slot n occupies [m_{n-1}, m_n).
struct SbtMember {
  PointStream point;
  PointStream selector;
  std::shared_ptr<const Schedule> schedule;
};
SbtMember make_sbt_member(const SbtSeedData& seed, PointStream selector);

/// Canonical checkpoint sequences for a scrambled pair with safe symbol K:
/// nu_j is block j's terminator position (the hat symbol there is K for
/// every point), mu_j the position of the first base disagreement gamma in
/// block gamma + j. Errors if the bases agree on the first scan_cap symbols.
struct CheckpointIndices {
  std::vector<std::uint64_t> nu;
  std::vector<std::uint64_t> mu;
  std::uint64_t gamma = 0;
};
CheckpointIndices checkpoint_indices(const PointStream& x,
                                     const PointStream& y, Symbol K,
                                     std::uint64_t count,
                                     std::uint64_t scan_cap = 1 << 20);

/// Segment-level agreement data for a constructed pair: slots whose content
/// is identical in both points (shared) and slots that disagree at every
/// position (differing). For hat-encoded pairs a slot is shared iff the hat
/// symbols coincide; block terminators always do.
struct SlotSequences {
  std::vector<std::uint64_t> shared;
  std::vector<std::uint64_t> differing;
};
SlotSequences hat_slot_sequences(const PointStream& xhat,
                                 const PointStream& yhat,
                                 std::uint64_t slot_cap = 64);

/// Same for two selector streams under the bounded-type layout: separator
/// slots are always shared; a selector slot is shared iff the bits agree.
SlotSequences sbt_slot_sequences(const PointStream& alpha,
                                 const PointStream& beta,
                                 std::uint64_t slot_cap = 64);

/// A provable first-disagreement position between two constructed points,
/// located through the segment structure instead of a linear scan (the
/// index routinely exceeds anything scannable). `index` is exact; when it
/// fits in 64 bits the symbols there can be compared directly.
struct ConstructedWitness {
  std::uint64_t slot = 0;
  BigInt index;
};

std::optional<ConstructedWitness> sft_pair_witness(const SftMember& x,
                                                   const SftMember& y,
                                                   std::uint64_t scan_cap = 1 << 20);
std::optional<ConstructedWitness> dense_pair_witness(const DenseMember& x,
                                                     const DenseMember& y,
                                                     std::uint64_t scan_cap = 1 << 20);
std::optional<ConstructedWitness> sbt_pair_witness(const SbtSeedData& seed,
                                                   const SbtMember& x,
                                                   const SbtMember& y,
                                                   std::uint64_t bit_scan_cap = 1 << 20);

}  // namespace baire
