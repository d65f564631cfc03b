#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "baire/core.hpp"

namespace baire {

enum class StreamKind {
  constant,
  periodic,
  encoded_scrambled,  // hat encodings and the scrambled-point constructions
  shifted,
  file_backed,
  seeded,  // deterministic two-symbol stream driven by a recorded seed
};

const char* stream_kind_name(StreamKind k);

/// An infinite point x = x_0 x_1 x_2 ... realized as a deterministic
/// index -> symbol map. Values are immutable descriptions; queries are pure
/// and safe to issue from several threads.
///
/// file_backed streams are the one partial kind: they only know a finite
/// prefix and throw std::out_of_range beyond it. bounded_length() reports
/// that limit so callers can clamp.
class PointStream {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual Symbol at(std::uint64_t i) const = 0;
    virtual void fill(std::uint64_t start, std::span<Symbol> out) const;
    virtual StreamKind kind() const = 0;
    virtual std::optional<std::uint64_t> bounded_length() const;
  };

  explicit PointStream(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  Symbol at(std::uint64_t i) const { return impl_->at(i); }
  void fill(std::uint64_t start, std::span<Symbol> out) const {
    impl_->fill(start, out);
  }
  StreamKind kind() const { return impl_->kind(); }
  std::optional<std::uint64_t> bounded_length() const {
    return impl_->bounded_length();
  }

  Word prefix(std::uint64_t n) const;

  const std::shared_ptr<const Impl>& impl() const { return impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

inline Symbol symbol_at(const PointStream& p, std::uint64_t i) {
  return p.at(i);
}

PointStream constant_stream(Symbol s);

/// Periodic point generated by a nonempty word.
PointStream periodic_stream(Word period);

/// The k-step shift: result(i) = p(i + k). Shifts of shifts flatten, so the
/// semigroup law costs nothing.
PointStream shift(const PointStream& p, std::uint64_t k);

/// Stream backed by a finite, already-materialized prefix.
PointStream file_backed_stream(std::vector<Symbol> symbols);

/// Lazy stream over {lo, hi} whose choices come from a recorded 64-bit seed.
/// forced_prefix pins the leading symbols (used to shape test corpora).
PointStream seeded_two_symbol_stream(Symbol lo, Symbol hi, std::uint64_t seed,
                                     Word forced_prefix = {});

bool prefixes_equal(const PointStream& x, const PointStream& y,
                    std::uint64_t n);

/// Prefix dump format: decimal symbols separated by whitespace, `#` starts
/// a comment that runs to end of line.
void write_prefix(std::ostream& os, const PointStream& p, std::uint64_t n,
                  const std::string& comment = {});
std::vector<Symbol> read_prefix(std::istream& is);
std::vector<Symbol> read_prefix_file(const std::string& path);

}  // namespace baire
