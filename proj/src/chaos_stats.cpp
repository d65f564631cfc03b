#include "baire/chaos_stats.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>

namespace baire {

const char* xi_predicate_name(XiPredicate m) {
  return m == XiPredicate::window_agree ? "window" : "strict";
}

const char* checkpoint_kind_name(CheckpointKind k) {
  return k == CheckpointKind::lower_at_nu ? "lower-at-nu" : "upper-at-mu";
}

std::vector<std::uint64_t> xi_count_multi(const PointStream& x,
                                          const PointStream& y,
                                          std::uint64_t window_t,
                                          XiPredicate mode,
                                          const std::vector<std::uint64_t>& ns) {
  if (!std::is_sorted(ns.begin(), ns.end()))
    throw std::invalid_argument("xi_count_multi: lengths must be sorted");
  std::vector<std::uint64_t> results(ns.size(), 0);
  if (ns.empty()) return results;
  const std::uint64_t T =
      mode == XiPredicate::strict_metric ? window_t + 1 : window_t;
  if (T == 0) {  // the distance condition is vacuous: every shift counts
    for (std::size_t k = 0; k < ns.size(); ++k) results[k] = ns[k];
    return results;
  }
  const std::uint64_t max_n = ns.back();
  std::size_t next = 0;
  while (next < ns.size() && ns[next] == 0) results[next++] = 0;
  if (max_n == 0) return results;

  const std::uint64_t total = max_n + T - 1;  // last symbol any window needs
  constexpr std::size_t kChunk = 1 << 15;
  std::vector<Symbol> bx(kChunk), by(kChunk);
  std::uint64_t run = 0, count = 0;
  for (std::uint64_t base = 0; base < total; base += kChunk) {
    const std::size_t len =
        static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, total - base));
    x.fill(base, std::span<Symbol>(bx.data(), len));
    y.fill(base, std::span<Symbol>(by.data(), len));
    for (std::size_t k = 0; k < len; ++k) {
      run = bx[k] == by[k] ? run + 1 : 0;
      const std::uint64_t pos = base + k;
      if (pos + 1 >= T) {
        const std::uint64_t window_index = pos + 1 - T;
        while (next < ns.size() && window_index == ns[next])
          results[next++] = count;
        count += run >= T;
      }
    }
  }
  while (next < ns.size()) results[next++] = count;
  return results;
}

std::uint64_t xi_count(const PointStream& x, const PointStream& y,
                       const XiQuery& query) {
  return xi_count_multi(x, y, query.window_t, query.mode, {query.n})[0];
}

BigRat xi_ratio(const BigInt& count, const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("xi_ratio: n must be >= 1");
  return BigRat(count, n);
}

BigRat bound_sft_lower(std::uint64_t nu, std::uint64_t q, const Schedule& s) {
  if (nu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  const BigInt two_nu = pow2(nu);
  return BigRat(two_nu, two_nu + 1) - BigRat(BigInt(q) + 1, s.m(nu));
}

BigRat bound_sft_upper(std::uint64_t mu, std::uint64_t w_len,
                       const Schedule& s) {
  if (mu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  return BigRat(1, pow2(mu) + 1) + BigRat(BigInt(w_len) + 1, s.m(mu));
}

BigRat bound_dense_lower(std::uint64_t nu, std::uint64_t t, std::uint64_t p,
                         std::uint64_t a_shift, const Schedule& s) {
  if (nu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  const BigInt m_prev = s.m(nu - 1);
  const BigInt two_nu = pow2(nu);
  // 2^nu / (1 + 2^nu + (p+1)/m_{nu-1}), cleared of the inner fraction.
  BigRat head(two_nu * m_prev, m_prev * (two_nu + 1) + p + 1);
  return head - BigRat(BigInt(t) + 1 + a_shift, BigInt(p) + 1 + s.m(nu));
}

BigRat bound_dense_upper(std::uint64_t mu, std::uint64_t p,
                         std::uint64_t a_shift, const Schedule& s) {
  if (mu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  const BigInt m_prev = s.m(mu - 1);
  BigRat head(m_prev, m_prev * (pow2(mu) + 1) + p + 1);
  return head + BigRat(BigInt(a_shift) + p + 1, BigInt(p) + 1 + s.m(mu));
}

BigRat bound_sbt_lower(std::uint64_t nu, std::uint64_t R, const Schedule& s) {
  if (nu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  const BigInt M2 = s.block_multiplier() * s.block_multiplier();
  const BigInt head = pow2(nu) * M2;
  return BigRat(head, head + 1) - BigRat(BigInt(R) + 1, s.m(nu));
}

BigRat bound_sbt_upper(std::uint64_t mu, const Schedule& s) {
  if (mu < 1) throw std::invalid_argument("bound needs checkpoint index >= 1");
  return BigRat(1, pow2(mu) + 1) + BigRat(s.block_multiplier(), s.m(mu));
}

bool CheckpointOutcome::all_satisfied() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckpointReport& r) { return r.satisfied; });
}

const CheckpointReport* CheckpointOutcome::largest(CheckpointKind k) const {
  const CheckpointReport* best = nullptr;
  for (const auto& r : reports)
    if (r.kind == k && (!best || r.ordinal > best->ordinal)) best = &r;
  return best;
}

namespace {

struct PlannedCheckpoint {
  std::uint64_t ordinal;
  std::uint64_t slot;
  std::uint64_t n;  // evaluation length, already known to fit the budget
};

BigInt evaluation_length(const CheckpointSpecification& spec,
                         std::uint64_t slot) {
  switch (spec.variant) {
    case ScheduleVariant::sft_cylinder:
      return spec.schedule->m(slot);  // the prefix is inside m already
    case ScheduleVariant::dense:
      return BigInt(spec.p_eval) + 1 + spec.schedule->m(slot);
    case ScheduleVariant::sbt:
      return spec.schedule->m(slot);
  }
  throw std::invalid_argument("unknown variant");
}

BigRat bound_for(const CheckpointSpecification& spec, CheckpointKind kind,
                 std::uint64_t slot) {
  switch (spec.variant) {
    case ScheduleVariant::sft_cylinder:
      return kind == CheckpointKind::lower_at_nu
                 ? bound_sft_lower(slot, spec.lower_window, *spec.schedule)
                 : bound_sft_upper(slot, spec.w_len, *spec.schedule);
    case ScheduleVariant::dense:
      return kind == CheckpointKind::lower_at_nu
                 ? bound_dense_lower(slot, spec.lower_window, spec.p_eval,
                                     spec.a_shift, *spec.schedule)
                 : bound_dense_upper(slot, spec.p_eval, spec.a_shift,
                                     *spec.schedule);
    case ScheduleVariant::sbt:
      return kind == CheckpointKind::lower_at_nu
                 ? bound_sbt_lower(slot, spec.lower_window, *spec.schedule)
                 : bound_sbt_upper(slot, *spec.schedule);
  }
  throw std::invalid_argument("unknown variant");
}

}  // namespace

CheckpointOutcome checkpoint_verify(const PointStream& x, const PointStream& y,
                                    const CheckpointSpecification& spec) {
  if (!spec.schedule || spec.schedule->variant() != spec.variant)
    throw std::invalid_argument("checkpoint_verify: schedule/variant mismatch");
  if (spec.mu_slots.empty())
    throw std::invalid_argument(
        "checkpoint_verify: the points never provably disagree (empty mu "
        "sequence); refusing a pair that may be equal");

  CheckpointOutcome out;
  for (CheckpointKind kind :
       {CheckpointKind::lower_at_nu, CheckpointKind::upper_at_mu}) {
    const auto& slots = kind == CheckpointKind::lower_at_nu ? spec.nu_slots
                                                            : spec.mu_slots;
    const std::uint64_t window =
        kind == CheckpointKind::lower_at_nu
            ? spec.lower_window
            : (spec.variant == ScheduleVariant::sbt
                   ? to_u64(spec.schedule->block_multiplier())
                   : 1);

    auto feasible = [&](std::uint64_t slot, BigInt& n_out) {
      if (slot < 1) return false;
      const BigInt n = evaluation_length(spec, slot);
      if (n + window > spec.budget) return false;
      n_out = n;
      return true;
    };

    std::vector<PlannedCheckpoint> plan;
    bool any_skipped = false;
    for (std::uint64_t ordinal : spec.ordinals) {
      if (ordinal >= slots.size()) {
        out.skipped.push_back({kind, ordinal, std::nullopt,
                               "sequence position beyond the slot scan cap"});
        any_skipped = true;
        continue;
      }
      const std::uint64_t slot = slots[ordinal];
      BigInt n;
      if (!feasible(slot, n)) {
        out.skipped.push_back(
            {kind, ordinal, slot,
             slot < 1 ? "checkpoint index below the bound's domain"
                      : "evaluation length exceeds the symbol budget"});
        any_skipped = true;
        continue;
      }
      plan.push_back({ordinal, slot, to_u64(n)});
    }

    if (any_skipped) {
      // Largest feasible ordinal of this kind, so the run still reports the
      // strongest checkpoint the budget allows.
      std::optional<PlannedCheckpoint> fallback;
      for (std::uint64_t ordinal = 0; ordinal < slots.size(); ++ordinal) {
        BigInt n;
        if (feasible(slots[ordinal], n))
          fallback = PlannedCheckpoint{ordinal, slots[ordinal], to_u64(n)};
      }
      if (fallback &&
          std::none_of(plan.begin(), plan.end(), [&](const PlannedCheckpoint& c) {
            return c.ordinal == fallback->ordinal;
          }))
        plan.push_back(*fallback);
    }

    std::sort(plan.begin(), plan.end(),
              [](const PlannedCheckpoint& a, const PlannedCheckpoint& b) {
                return a.n < b.n;
              });
    std::vector<std::uint64_t> lengths;
    lengths.reserve(plan.size());
    for (const auto& c : plan) lengths.push_back(c.n);
    const std::vector<std::uint64_t> counts =
        xi_count_multi(x, y, window, spec.mode, lengths);

    for (std::size_t i = 0; i < plan.size(); ++i) {
      CheckpointReport r;
      r.kind = kind;
      r.ordinal = plan[i].ordinal;
      r.slot = plan[i].slot;
      r.n = BigInt(plan[i].n);
      r.count = BigInt(counts[i]);
      r.ratio = xi_ratio(r.count, r.n);
      r.bound = bound_for(spec, kind, plan[i].slot);
      r.satisfied = kind == CheckpointKind::lower_at_nu ? r.ratio >= r.bound
                                                        : r.ratio <= r.bound;
      out.reports.push_back(std::move(r));
    }
  }

  std::sort(out.reports.begin(), out.reports.end(),
            [](const CheckpointReport& a, const CheckpointReport& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.ordinal < b.ordinal;
            });
  return out;
}

CsvRow to_csv_row(const CheckpointReport& r) {
  return CsvRow{r.n,     r.count,        r.ratio, r.bound,
                checkpoint_kind_name(r.kind), r.ordinal, r.satisfied};
}

void write_csv(std::ostream& os,
               const std::vector<std::pair<std::string, std::string>>& metadata,
               const std::vector<CsvRow>& rows) {
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  os << "n,count,ratio_num,ratio_den,ratio_float64,bound_num,bound_den,kind,j,"
        "satisfied\n";
  for (const CsvRow& r : rows) {
    std::ostringstream line;
    line << r.n.str() << ',' << r.count.str() << ','
         << boost::multiprecision::numerator(r.ratio).str() << ','
         << boost::multiprecision::denominator(r.ratio).str() << ','
         << std::setprecision(17) << rat_to_double(r.ratio) << ',';
    if (r.bound)
      line << boost::multiprecision::numerator(*r.bound).str() << ','
           << boost::multiprecision::denominator(*r.bound).str();
    else
      line << ',';
    line << ',' << r.kind << ',' << r.j << ',';
    if (r.satisfied) line << (*r.satisfied ? '1' : '0');
    os << line.str() << '\n';
  }
}

}  // namespace baire
