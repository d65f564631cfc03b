#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "baire/bigint.hpp"
#include "baire/point_stream.hpp"
#include "baire/schedule.hpp"

namespace baire {

/// How the closeness predicate reads the dyadic threshold 2^(-t).
/// window_agree counts shifts whose next t symbols coincide (d <= 2^-t),
/// which is what the proofs' displayed counts do; strict_metric counts
/// d < 2^-t, i.e. agreement on t+1 symbols. t = 0 under window_agree counts
/// every shift.
enum class XiPredicate { window_agree, strict_metric };
const char* xi_predicate_name(XiPredicate m);

struct XiQuery {
  std::uint64_t window_t = 1;
  std::uint64_t n = 0;
  XiPredicate mode = XiPredicate::window_agree;
};

/// Exact count of shifts i < n that satisfy the query's predicate. One
/// streaming pass; reads at most n + t symbols of each stream and keeps
/// constant extra memory (a run length of currently agreeing positions).
std::uint64_t xi_count(const PointStream& x, const PointStream& y,
                       const XiQuery& query);

/// Same pass, sampled at several prefix lengths (ns must be sorted).
std::vector<std::uint64_t> xi_count_multi(const PointStream& x,
                                          const PointStream& y,
                                          std::uint64_t window_t,
                                          XiPredicate mode,
                                          const std::vector<std::uint64_t>& ns);

/// count / n in lowest terms. Rejects n = 0.
BigRat xi_ratio(const BigInt& count, const BigInt& n);

// The proofs' analytic bound chains, evaluated exactly. Each lower bound is
// what the displayed inequality chain guarantees for the ratio at m_nu; each
// upper bound caps the ratio at m_mu. All require the checkpoint index >= 1.
BigRat bound_sft_lower(std::uint64_t nu, std::uint64_t q, const Schedule& s);
BigRat bound_sft_upper(std::uint64_t mu, std::uint64_t w_len, const Schedule& s);
BigRat bound_dense_lower(std::uint64_t nu, std::uint64_t t, std::uint64_t p,
                         std::uint64_t a_shift, const Schedule& s);
BigRat bound_dense_upper(std::uint64_t mu, std::uint64_t p,
                         std::uint64_t a_shift, const Schedule& s);
BigRat bound_sbt_lower(std::uint64_t nu, std::uint64_t R, const Schedule& s);
BigRat bound_sbt_upper(std::uint64_t mu, const Schedule& s);

enum class CheckpointKind { lower_at_nu, upper_at_mu };
const char* checkpoint_kind_name(CheckpointKind k);

struct CheckpointReport {
  CheckpointKind kind;
  std::uint64_t ordinal;  // j: position in the nu/mu sequence
  std::uint64_t slot;     // nu_j or mu_j
  BigInt n;               // evaluation length
  BigInt count;
  BigRat ratio;
  BigRat bound;
  bool satisfied = false;
};

struct SkippedCheckpoint {
  CheckpointKind kind;
  std::uint64_t ordinal;
  std::optional<std::uint64_t> slot;  // absent: sequence ran out of the scan cap
  std::string reason;
};

/// One pair's verification plan. nu_slots / mu_slots are the pair's shared
/// and differing segment sequences; `ordinals` lists which sequence
/// positions to check. A checkpoint whose evaluation length (plus window)
/// exceeds `budget` is skipped and reported; when that happens the largest
/// feasible ordinal of the same kind is evaluated instead, so a run always
/// yields the strongest checkpoint the budget allows.
struct CheckpointSpecification {
  ScheduleVariant variant;
  std::shared_ptr<const Schedule> schedule;
  std::uint64_t w_len = 0;    // sft: |w|
  std::uint64_t p_eval = 0;   // dense: max(p, q) of the pair
  std::uint64_t a_shift = 0;  // dense: |p - q|
  std::uint64_t lower_window = 1;  // q (sft) / t (dense) / R (sbt)
  std::vector<std::uint64_t> nu_slots;
  std::vector<std::uint64_t> mu_slots;
  std::vector<std::uint64_t> ordinals;
  BigInt budget = BigInt(200000000);
  XiPredicate mode = XiPredicate::window_agree;
};

struct CheckpointOutcome {
  std::vector<CheckpointReport> reports;
  std::vector<SkippedCheckpoint> skipped;
  bool all_satisfied() const;
  const CheckpointReport* largest(CheckpointKind k) const;
};

CheckpointOutcome checkpoint_verify(const PointStream& x, const PointStream& y,
                                    const CheckpointSpecification& spec);

/// CSV row shared by trajectory dumps and checkpoint tables. Bound columns
/// stay empty for plain trajectories.
struct CsvRow {
  BigInt n;
  BigInt count;
  BigRat ratio;
  std::optional<BigRat> bound;
  std::string kind;
  std::uint64_t j = 0;
  std::optional<bool> satisfied;
};

CsvRow to_csv_row(const CheckpointReport& r);

/// Writes `# key=value` metadata lines, the fixed header, then the rows.
/// Big integers are rendered in decimal; the float column is display-only.
void write_csv(std::ostream& os,
               const std::vector<std::pair<std::string, std::string>>& metadata,
               const std::vector<CsvRow>& rows);

}  // namespace baire
