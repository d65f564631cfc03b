#include "baire/point_stream.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "baire/rng.hpp"

namespace baire {

void PointStream::Impl::fill(std::uint64_t start, std::span<Symbol> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(start + i);
}

std::optional<std::uint64_t> PointStream::Impl::bounded_length() const {
  return std::nullopt;
}

const char* stream_kind_name(StreamKind k) {
  switch (k) {
    case StreamKind::constant: return "constant";
    case StreamKind::periodic: return "periodic";
    case StreamKind::encoded_scrambled: return "encoded-scrambled";
    case StreamKind::shifted: return "shifted";
    case StreamKind::file_backed: return "file-backed";
    case StreamKind::seeded: return "seeded";
  }
  return "unknown";
}

Word PointStream::prefix(std::uint64_t n) const {
  Word out(n);
  if (n) fill(0, std::span<Symbol>(out.data(), n));
  return out;
}

namespace {

struct ConstantStream final : PointStream::Impl {
  Symbol value;
  explicit ConstantStream(Symbol v) : value(v) {}
  Symbol at(std::uint64_t) const override { return value; }
  void fill(std::uint64_t, std::span<Symbol> out) const override {
    std::fill(out.begin(), out.end(), value);
  }
  StreamKind kind() const override { return StreamKind::constant; }
};

struct PeriodicStream final : PointStream::Impl {
  Word period;
  explicit PeriodicStream(Word w) : period(std::move(w)) {}
  Symbol at(std::uint64_t i) const override {
    return period[i % period.size()];
  }
  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    const std::size_t n = period.size();
    std::size_t off = static_cast<std::size_t>(start % n);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = period[off];
      if (++off == n) off = 0;
    }
  }
  StreamKind kind() const override { return StreamKind::periodic; }
};

struct ShiftedStream final : PointStream::Impl {
  std::shared_ptr<const PointStream::Impl> base;
  std::uint64_t offset;
  ShiftedStream(std::shared_ptr<const PointStream::Impl> b, std::uint64_t k)
      : base(std::move(b)), offset(k) {}
  Symbol at(std::uint64_t i) const override { return base->at(i + offset); }
  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    base->fill(start + offset, out);
  }
  StreamKind kind() const override { return StreamKind::shifted; }
  std::optional<std::uint64_t> bounded_length() const override {
    auto b = base->bounded_length();
    if (!b) return std::nullopt;
    return *b > offset ? *b - offset : 0;
  }
};

struct FileBackedStream final : PointStream::Impl {
  std::vector<Symbol> symbols;
  explicit FileBackedStream(std::vector<Symbol> s) : symbols(std::move(s)) {}
  Symbol at(std::uint64_t i) const override {
    if (i >= symbols.size())
      throw std::out_of_range(
          "file-backed stream queried past its loaded prefix (index " +
          std::to_string(i) + ", length " + std::to_string(symbols.size()) +
          ")");
    return symbols[static_cast<std::size_t>(i)];
  }
  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    if (start + out.size() > symbols.size())
      throw std::out_of_range("file-backed stream queried past its prefix");
    std::copy_n(symbols.begin() + static_cast<std::ptrdiff_t>(start),
                out.size(), out.begin());
  }
  StreamKind kind() const override { return StreamKind::file_backed; }
  std::optional<std::uint64_t> bounded_length() const override {
    return symbols.size();
  }
};

struct SeededTwoSymbolStream final : PointStream::Impl {
  Symbol lo, hi;
  std::uint64_t seed;
  Word forced;
  SeededTwoSymbolStream(Symbol l, Symbol h, std::uint64_t s, Word f)
      : lo(l), hi(h), seed(s), forced(std::move(f)) {}
  Symbol at(std::uint64_t i) const override {
    if (i < forced.size()) return forced[static_cast<std::size_t>(i)];
    return seeded_bit(seed, i) ? hi : lo;
  }
  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = at(start + k);
  }
  StreamKind kind() const override { return StreamKind::seeded; }
};

}  // namespace

PointStream constant_stream(Symbol s) {
  return PointStream(std::make_shared<ConstantStream>(s));
}

PointStream periodic_stream(Word period) {
  if (period.empty())
    throw std::invalid_argument("periodic stream needs a nonempty word");
  return PointStream(std::make_shared<PeriodicStream>(std::move(period)));
}

PointStream shift(const PointStream& p, std::uint64_t k) {
  if (k == 0) return p;
  if (auto* s = dynamic_cast<const ShiftedStream*>(p.impl().get()))
    return PointStream(std::make_shared<ShiftedStream>(s->base, s->offset + k));
  return PointStream(std::make_shared<ShiftedStream>(p.impl(), k));
}

PointStream file_backed_stream(std::vector<Symbol> symbols) {
  return PointStream(std::make_shared<FileBackedStream>(std::move(symbols)));
}

PointStream seeded_two_symbol_stream(Symbol lo, Symbol hi, std::uint64_t seed,
                                     Word forced_prefix) {
  for (Symbol s : forced_prefix)
    if (s != lo && s != hi)
      throw std::invalid_argument("forced prefix symbol outside {lo, hi}");
  return PointStream(std::make_shared<SeededTwoSymbolStream>(
      lo, hi, seed, std::move(forced_prefix)));
}

bool prefixes_equal(const PointStream& x, const PointStream& y,
                    std::uint64_t n) {
  constexpr std::size_t kChunk = 4096;
  Symbol bx[kChunk], by[kChunk];
  std::uint64_t done = 0;
  while (done < n) {
    const std::size_t len =
        static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, n - done));
    x.fill(done, std::span<Symbol>(bx, len));
    y.fill(done, std::span<Symbol>(by, len));
    if (!std::equal(bx, bx + len, by)) return false;
    done += len;
  }
  return true;
}

void write_prefix(std::ostream& os, const PointStream& p, std::uint64_t n,
                  const std::string& comment) {
  if (!comment.empty()) os << "# " << comment << '\n';
  constexpr std::uint64_t kPerLine = 20;
  for (std::uint64_t i = 0; i < n; ++i) {
    os << p.at(i);
    os << (((i + 1) % kPerLine == 0 || i + 1 == n) ? '\n' : ' ');
  }
}

std::vector<Symbol> read_prefix(std::istream& is) {
  std::vector<Symbol> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    try {
      Word w = parse_word(line);
      out.insert(out.end(), w.begin(), w.end());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return out;
}

std::vector<Symbol> read_prefix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open prefix file: " + path);
  try {
    return read_prefix(is);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace baire
