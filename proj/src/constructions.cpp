#include "baire/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "baire/metric.hpp"

namespace baire {

std::shared_ptr<const Schedule> make_schedule(ScheduleVariant v,
                                              std::uint64_t word_len,
                                              const BigInt& M) {
  switch (v) {
    case ScheduleVariant::sft_cylinder: return Schedule::sft_cylinder(word_len);
    case ScheduleVariant::dense: return Schedule::dense();
    case ScheduleVariant::sbt: return Schedule::sbt(M);
  }
  throw std::invalid_argument("unknown schedule variant");
}

namespace {

// Common shape of the cylinder and dense points: a word prefix, the safe
// symbol, then constant runs u(hat_j, j) of length s_j.
struct EncodedRunStream final : PointStream::Impl {
  Word prefix;  // w followed by K
  PointStream hat;
  SegmentLayout layout;

  EncodedRunStream(Word pfx, PointStream h, SegmentLayout lay)
      : prefix(std::move(pfx)), hat(std::move(h)), layout(std::move(lay)) {}

  Symbol at(std::uint64_t i) const override {
    if (i < prefix.size()) return prefix[static_cast<std::size_t>(i)];
    return hat.at(layout.locate(i).segment);
  }

  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    std::size_t done = 0;
    std::uint64_t pos = start;
    while (done < out.size() && pos < prefix.size()) {
      out[done++] = prefix[static_cast<std::size_t>(pos++)];
    }
    while (done < out.size()) {
      const auto loc = layout.locate(pos);
      const Symbol sym = hat.at(loc.segment);
      const BigInt seg_end = layout.end(loc.segment);
      const std::uint64_t run_big = to_u64(
          seg_end - pos > BigInt(out.size() - done) ? BigInt(out.size() - done)
                                                    : seg_end - pos);
      std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(done),
                  static_cast<std::size_t>(run_big), sym);
      done += static_cast<std::size_t>(run_big);
      pos += run_big;
    }
  }

  StreamKind kind() const override { return StreamKind::encoded_scrambled; }
};

}  // namespace

SftMember make_sft_member(const SubshiftSpec& spec, const Word& w,
                          PointStream base) {
  if (!is_allowed(spec, w))
    throw std::invalid_argument("cylinder word is forbidden in this subshift");
  const Symbol K = compute_safe_symbol_K(spec.basis());
  auto schedule = Schedule::sft_cylinder(w.size());
  PointStream hat = hat_encode(base, K);
  Word prefix = w;
  prefix.push_back(K);
  SegmentLayout layout{schedule, static_cast<std::uint64_t>(w.size()) + 1};
  PointStream point(std::make_shared<EncodedRunStream>(prefix, hat, layout));
  return SftMember{std::move(point), std::move(base), std::move(hat), w, K,
                   std::move(schedule)};
}

DenseMember make_dense_member(const SubshiftSpec& spec, std::uint64_t p,
                              std::uint64_t g, PointStream base,
                              std::uint64_t certify_cap) {
  if (p == 0) throw std::invalid_argument("dense member needs p >= 1");
  const Symbol K = compute_safe_symbol_K(spec.basis());
  if (K < 1)
    throw std::invalid_argument(
        "dense family needs a nonempty basis: with K = 0 the base alphabet "
        "collides with the safe symbol");
  const Symbol r = 2 * (K + g);
  const Symbol lo = r, hi = r + p;

  // Finite certification of the base preconditions: symbols confined to
  // {r_g, r_g+p} and both values present (a stream that is constant on the
  // whole scanned prefix is rejected; constancy beyond it is undecidable).
  bool saw_lo = false, saw_hi = false;
  constexpr std::size_t kChunk = 4096;
  Symbol buf[kChunk];
  for (std::uint64_t done = 0; done < certify_cap && !(saw_lo && saw_hi);) {
    const std::size_t len = static_cast<std::size_t>(
        std::min<std::uint64_t>(kChunk, certify_cap - done));
    base.fill(done, std::span<Symbol>(buf, len));
    for (std::size_t i = 0; i < len; ++i) {
      if (buf[i] == lo) saw_lo = true;
      else if (buf[i] == hi) saw_hi = true;
      else
        throw std::invalid_argument(
            "dense base symbol outside {r_g, r_g+p} at index " +
            std::to_string(done + i));
    }
    done += len;
  }
  if (!(saw_lo && saw_hi))
    throw std::invalid_argument(
        "dense base looks constant within the certification cap");

  Word w = nth_allowed_word(spec, p, g);
  auto schedule = Schedule::dense();
  PointStream hat = hat_encode(base, K);
  Word prefix = w;
  prefix.push_back(K);
  SegmentLayout layout{schedule, p + 1};
  PointStream point(std::make_shared<EncodedRunStream>(prefix, hat, layout));
  return DenseMember{std::move(point), std::move(base), std::move(hat),
                     std::move(w),     p,
                     g,                K,
                     r,                std::move(schedule)};
}

SbtSeedData make_sbt_seed(const SubshiftSpec& spec, const Word& z_period,
                          const Word& x_period, const Word& y_period) {
  if (!spec.gluing_constant())
    throw std::invalid_argument("bounded-type seed needs a declared gluing constant N");
  const std::uint64_t N = *spec.gluing_constant();
  const std::uint64_t L = spec.basis().max_word_length();
  const Symbol K = std::max<std::uint64_t>(L, N);

  auto require_primitive = [](const Word& w, const char* name) {
    if (!is_primitive(w))
      throw std::invalid_argument(std::string(name) +
                                  " period word is not primitive");
  };
  require_primitive(z_period, "z");
  require_primitive(x_period, "x");
  require_primitive(y_period, "y");

  const std::uint64_t p = z_period.size();
  const std::uint64_t q = x_period.size();
  const std::uint64_t r = y_period.size();
  if (!(BigInt(p) > factorial(K)))
    throw std::invalid_argument("need prime period p > K!");
  if (!(q > p && r > q))
    throw std::invalid_argument("need prime periods p < q < r");
  if (p * q > (1ULL << 24) || p * r > (1ULL << 24))
    throw std::invalid_argument("seed periods too large to materialize words");

  PointStream z = periodic_stream(z_period);
  PointStream x = periodic_stream(x_period);
  PointStream y = periodic_stream(y_period);
  for (std::uint64_t i = 0; i < p; ++i)
    if (x.at(i) != z.at(i) || y.at(i) != z.at(i))
      throw std::invalid_argument(
          "seed points must agree with z on the first p symbols");

  Word a(z_period.begin(), z_period.end());
  Word b, c;
  b.reserve(p * (q - 1));
  for (std::uint64_t i = p; i < p * q; ++i) b.push_back(x.at(i));
  c.reserve(p * (r - 1));
  for (std::uint64_t i = p; i < p * r; ++i) c.push_back(y.at(i));
  if (!(b.size() > K && c.size() > K))
    throw std::invalid_argument("splice words must be longer than K");

  const Word ba = concat(b, a);
  const Word ca = concat(c, a);
  for (const auto& [word, name] :
       {std::pair<Word, const char*>{concat(concat(a, b), a), "aba"},
        {concat(concat(c, a), b), "cab"},
        {concat(concat(c, a), c), "cac"}}) {
    if (!is_allowed(spec, word))
      throw std::invalid_argument(std::string("gluing word ") + name +
                                  " hits the forbidden basis");
  }

  const BigInt M = boost::multiprecision::lcm(
      boost::multiprecision::lcm(BigInt(a.size()), BigInt(ba.size())),
      BigInt(ca.size()));
  const BigInt A = M / a.size(), B = M / ba.size(), C = M / ca.size();
  if (!fits_u64(M) || to_u64(M) > (1ULL << 30))
    throw std::invalid_argument("block length M too large for stream layout");
  const std::uint64_t M64 = to_u64(M);

  Word I0 = repeat_word(ba, static_cast<std::size_t>(to_u64(B)));
  Word I1 = repeat_word(ca, static_cast<std::size_t>(to_u64(C)));
  std::optional<std::uint64_t> theta;
  for (std::uint64_t i = 0; i < M64; ++i)
    if (I0[i] != I1[i]) {
      theta = i;
      break;
    }
  if (!theta)
    throw std::invalid_argument("(ba)^B and (ca)^C coincide; seed unusable");

  return SbtSeedData{std::move(a), std::move(b), std::move(c),
                     p,            q,            r,
                     A,            B,            C,
                     M,            M64,          K,
                     std::move(I0), std::move(I1), *theta,
                     std::move(z), std::move(x), std::move(y),
                     Schedule::sbt(M)};
}

namespace {

struct SbtStream final : PointStream::Impl {
  Word a, I0, I1;
  std::uint64_t M;
  PointStream selector;
  SegmentLayout layout;

  SbtStream(Word a_, Word i0, Word i1, std::uint64_t m, PointStream sel,
            SegmentLayout lay)
      : a(std::move(a_)), I0(std::move(i0)), I1(std::move(i1)), M(m),
        selector(std::move(sel)), layout(std::move(lay)) {}

  bool bit_at(std::uint64_t i) const {
    const Symbol b = selector.at(i);
    if (b > 1)
      throw std::invalid_argument("selector stream carries a symbol > 1");
    return b == 1;
  }

  // Slot n sits on the hat geometry: offsets 0..k of block k are the
  // selector slots for bits 0..k, the terminator is an a-slot.
  const Word& slot_pattern(std::uint64_t slot) const {
    const HatPosition pos = hat_position(slot);
    if (pos.is_terminator) return a;
    return bit_at(pos.offset) ? I1 : I0;
  }

  Symbol at(std::uint64_t i) const override {
    const auto loc = layout.locate(i);
    const Word& pat = slot_pattern(loc.segment);
    return pat[static_cast<std::size_t>(loc.offset % pat.size())];
  }

  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    std::size_t done = 0;
    std::uint64_t pos = start;
    while (done < out.size()) {
      const auto loc = layout.locate(pos);
      const Word& pat = slot_pattern(loc.segment);
      const BigInt seg_end = layout.end(loc.segment);
      std::uint64_t run = to_u64(seg_end - pos > BigInt(out.size() - done)
                                     ? BigInt(out.size() - done)
                                     : seg_end - pos);
      std::size_t off = static_cast<std::size_t>(loc.offset % pat.size());
      while (run > 0) {
        const std::size_t piece = static_cast<std::size_t>(
            std::min<std::uint64_t>(run, pat.size() - off));
        std::copy_n(pat.begin() + static_cast<std::ptrdiff_t>(off), piece,
                    out.begin() + static_cast<std::ptrdiff_t>(done));
        done += piece;
        pos += piece;
        run -= piece;
        off = 0;
      }
    }
  }

  StreamKind kind() const override { return StreamKind::encoded_scrambled; }
};

}  // namespace

SbtMember make_sbt_member(const SbtSeedData& seed, PointStream selector) {
  SegmentLayout layout{seed.schedule, 0};
  PointStream point(std::make_shared<SbtStream>(seed.a, seed.I0, seed.I1,
                                                seed.M64, selector, layout));
  return SbtMember{std::move(point), std::move(selector), seed.schedule};
}

CheckpointIndices checkpoint_indices(const PointStream& x,
                                     const PointStream& y, Symbol /*K*/,
                                     std::uint64_t count,
                                     std::uint64_t scan_cap) {
  auto gamma = disagreement_witness(x, y, scan_cap);
  if (!gamma)
    throw std::invalid_argument(
        "no base disagreement within the scan cap; the mu sequence is empty");
  CheckpointIndices out;
  out.gamma = *gamma;
  out.nu.reserve(count);
  out.mu.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    out.nu.push_back(block_terminator_position(j));
    out.mu.push_back(triangular_block_start(*gamma + j) + *gamma);
  }
  return out;
}

SlotSequences hat_slot_sequences(const PointStream& xhat,
                                 const PointStream& yhat,
                                 std::uint64_t slot_cap) {
  SlotSequences out;
  for (std::uint64_t n = 0; n < slot_cap; ++n) {
    if (xhat.at(n) == yhat.at(n))
      out.shared.push_back(n);
    else
      out.differing.push_back(n);
  }
  return out;
}

SlotSequences sbt_slot_sequences(const PointStream& alpha,
                                 const PointStream& beta,
                                 std::uint64_t slot_cap) {
  SlotSequences out;
  for (std::uint64_t n = 0; n < slot_cap; ++n) {
    const HatPosition pos = hat_position(n);
    if (pos.is_terminator || alpha.at(pos.offset) == beta.at(pos.offset))
      out.shared.push_back(n);
    else
      out.differing.push_back(n);
  }
  return out;
}

namespace {

// First hat slot whose symbols differ, given the first base disagreement.
// Offsets below gamma agree everywhere, terminators always agree, so the
// earliest candidate is offset gamma of block gamma.
std::optional<std::uint64_t> first_differing_hat_slot(const PointStream& xbase,
                                                      const PointStream& ybase,
                                                      std::uint64_t scan_cap) {
  auto gamma = disagreement_witness(xbase, ybase, scan_cap);
  if (!gamma) return std::nullopt;
  return triangular_block_start(*gamma) + *gamma;
}

}  // namespace

std::optional<ConstructedWitness> sft_pair_witness(const SftMember& x,
                                                   const SftMember& y,
                                                   std::uint64_t scan_cap) {
  if (x.w != y.w || x.K != y.K)
    throw std::invalid_argument("witness: members from different cylinders");
  auto slot = first_differing_hat_slot(x.base, y.base, scan_cap);
  if (!slot) return std::nullopt;
  return ConstructedWitness{*slot, x.layout().begin(*slot)};
}

std::optional<ConstructedWitness> dense_pair_witness(const DenseMember& x,
                                                     const DenseMember& y,
                                                     std::uint64_t scan_cap) {
  // A difference inside the word prefixes is found directly.
  const std::uint64_t probe = std::max<std::uint64_t>(x.p, y.p) + 2;
  for (std::uint64_t i = 0; i < probe; ++i)
    if (x.point.at(i) != y.point.at(i))
      return ConstructedWitness{0, BigInt(i)};
  // Otherwise the bases disagree (the two-symbol alphabets differ as sets
  // whenever (p,g) differ, and non-constant bases must leave the common
  // part). The difference surfaces at the start of the longer member's
  // segment for the first disagreeing offset, provided the frame
  // misalignment |p-q| stays below the segment length.
  auto gamma = disagreement_witness(x.base, y.base, scan_cap);
  if (!gamma) return std::nullopt;
  const DenseMember& longer = x.p >= y.p ? x : y;
  const BigInt a(x.p >= y.p ? x.p - y.p : y.p - x.p);
  std::uint64_t block = *gamma;
  std::uint64_t slot = triangular_block_start(block) + *gamma;
  while (longer.schedule->s(slot) <= a)
    slot = triangular_block_start(++block) + *gamma;
  return ConstructedWitness{slot, longer.layout().begin(slot)};
}

std::optional<ConstructedWitness> sbt_pair_witness(const SbtSeedData& seed,
                                                   const SbtMember& x,
                                                   const SbtMember& y,
                                                   std::uint64_t bit_scan_cap) {
  auto bit = disagreement_witness(x.selector, y.selector, bit_scan_cap);
  if (!bit) return std::nullopt;
  // First slot carrying bit i sits at offset i of block i.
  const std::uint64_t slot = triangular_block_start(*bit) + *bit;
  SegmentLayout layout{seed.schedule, 0};
  return ConstructedWitness{slot, layout.begin(slot) + seed.theta};
}

}  // namespace baire
