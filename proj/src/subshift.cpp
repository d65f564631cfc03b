#include "baire/subshift.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>

namespace baire {

ForbiddenBasis::ForbiddenBasis(std::vector<Word> words)
    : words_(std::move(words)) {
  for (const Word& w : words_) {
    if (w.empty())
      throw std::invalid_argument("forbidden basis may not contain the empty word");
    max_word_length_ = std::max<std::uint64_t>(max_word_length_, w.size());
    for (Symbol s : w)
      max_symbol_ = max_symbol_ ? std::max(*max_symbol_, s) : s;
  }
}

MultiPatternMatcher::MultiPatternMatcher(const std::vector<Word>& patterns) {
  nodes_.emplace_back();
  for (const Word& p : patterns) {
    if (p.empty()) continue;
    has_patterns_ = true;
    std::uint32_t cur = 0;
    for (Symbol s : p) {
      max_symbol_ = std::max(max_symbol_, s);
      auto it = nodes_[cur].next.find(s);
      if (it == nodes_[cur].next.end()) {
        nodes_.emplace_back();
        std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
        nodes_[cur].next.emplace(s, id);
        cur = id;
      } else {
        cur = it->second;
      }
    }
    nodes_[cur].best_len = std::max<std::uint64_t>(nodes_[cur].best_len, p.size());
  }
  // Breadth-first failure links; best_len inherits the longest suffix match.
  std::deque<std::uint32_t> queue;
  for (auto& [sym, child] : nodes_[0].next) {
    nodes_[child].fail = 0;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    nodes_[u].best_len = std::max(nodes_[u].best_len, nodes_[nodes_[u].fail].best_len);
    for (auto& [sym, child] : nodes_[u].next) {
      std::uint32_t f = nodes_[u].fail;
      while (f != 0 && !nodes_[f].next.count(sym)) f = nodes_[f].fail;
      auto it = nodes_[f].next.find(sym);
      nodes_[child].fail = (it != nodes_[f].next.end() && it->second != child)
                               ? it->second
                               : 0;
      queue.push_back(child);
    }
  }
}

std::uint64_t MultiPatternMatcher::feed(State& st, Symbol s) const {
  if (!has_patterns_ || s > max_symbol_) {
    st.node = 0;
    return 0;
  }
  std::uint32_t u = st.node;
  for (;;) {
    auto it = nodes_[u].next.find(s);
    if (it != nodes_[u].next.end()) {
      u = it->second;
      break;
    }
    if (u == 0) break;
    u = nodes_[u].fail;
  }
  st.node = u;
  return nodes_[u].best_len;
}

SubshiftSpec::SubshiftSpec(ForbiddenBasis basis,
                           std::optional<std::uint64_t> gluing_constant,
                           std::string description)
    : basis_(std::move(basis)),
      gluing_(gluing_constant),
      description_(std::move(description)),
      matcher_(std::make_shared<MultiPatternMatcher>(basis_.words())) {}

SubshiftSpec SubshiftSpec::full_shift(std::optional<std::uint64_t> gluing) {
  return SubshiftSpec(ForbiddenBasis{}, gluing, "full shift");
}

bool is_allowed(const SubshiftSpec& spec, const Word& w) {
  if (!spec.matcher().has_patterns()) return true;
  MultiPatternMatcher::State st;
  for (Symbol s : w)
    if (spec.matcher().feed(st, s) > 0) return false;
  return true;
}

Symbol compute_safe_symbol_K(const ForbiddenBasis& basis) {
  auto m = basis.max_symbol();
  return m ? *m + 1 : 0;
}

bool prefix_in_shift(const SubshiftSpec& spec, const PointStream& x,
                     std::uint64_t n) {
  if (!spec.matcher().has_patterns() || n == 0) return true;
  const std::uint64_t L = spec.basis().max_word_length();
  const std::uint64_t end = n + L - 1;  // last position a word starting < n can reach
  constexpr std::size_t kChunk = 8192;
  Symbol buf[kChunk];
  MultiPatternMatcher::State st;
  std::uint64_t pos = 0;
  while (pos < end) {
    const std::size_t len =
        static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, end - pos));
    x.fill(pos, std::span<Symbol>(buf, len));
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t hit = spec.matcher().feed(st, buf[i]);
      if (hit > 0 && pos + i + 1 - hit < n) return false;
    }
    pos += len;
  }
  return true;
}

const char* gluing_verdict_name(GluingVerdict v) {
  switch (v) {
    case GluingVerdict::holds: return "holds";
    case GluingVerdict::violated: return "violated";
    case GluingVerdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

GluingVerdict verify_gluing_instance(const SubshiftSpec& spec, const Word& a,
                                     const Word& b, const Word& c) {
  if (!spec.gluing_constant())
    throw std::invalid_argument("spec declares no gluing constant");
  if (b.size() < *spec.gluing_constant()) return GluingVerdict::inapplicable;
  if (!is_allowed(spec, concat(a, b)) || !is_allowed(spec, concat(b, c)))
    return GluingVerdict::inapplicable;
  return is_allowed(spec, concat(concat(a, b), c)) ? GluingVerdict::holds
                                                   : GluingVerdict::violated;
}

AllowedWordEnumerator::AllowedWordEnumerator(const SubshiftSpec& spec,
                                             std::uint64_t p)
    : spec_(&spec), p_(p) {
  if (p == 0) throw std::invalid_argument("enumeration needs word length >= 1");
  digits_.assign(p, 0);
}

bool AllowedWordEnumerator::advance_odometer() {
  // Base-(block_max_+1) increment, most significant digit first.
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (digits_[i] < block_max_) {
      ++digits_[i];
      std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                digits_.end(), 0);
      return true;
    }
  }
  return false;  // wrapped: block exhausted
}

Word AllowedWordEnumerator::next() {
  for (;;) {
    if (block_fresh_) {
      std::fill(digits_.begin(), digits_.end(), 0);
      block_fresh_ = false;
      if (block_max_ == 0) {
        if (is_allowed(*spec_, digits_)) return digits_;
        // fall through to advancing (which exhausts the 1-word block)
      } else if (std::find(digits_.begin(), digits_.end(), block_max_) !=
                     digits_.end() &&
                 is_allowed(*spec_, digits_)) {
        return digits_;
      }
    }
    while (advance_odometer()) {
      if (std::find(digits_.begin(), digits_.end(), block_max_) ==
          digits_.end())
        continue;  // belongs to an earlier block
      if (is_allowed(*spec_, digits_)) return digits_;
    }
    ++block_max_;
    block_fresh_ = true;
  }
}

Word nth_allowed_word(const SubshiftSpec& spec, std::uint64_t p,
                      std::uint64_t g) {
  AllowedWordEnumerator en(spec, p);
  Word w;
  for (std::uint64_t i = 0; i <= g; ++i) w = en.next();
  return w;
}

std::optional<std::uint64_t> allowed_word_index(const SubshiftSpec& spec,
                                                const Word& w,
                                                std::uint64_t scan_cap) {
  if (w.empty() || !is_allowed(spec, w)) return std::nullopt;
  AllowedWordEnumerator en(spec, w.size());
  for (std::uint64_t g = 0; g < scan_cap; ++g)
    if (en.next() == w) return g;
  return std::nullopt;
}

bool periodic_point_in_shift(const SubshiftSpec& spec, const Word& period) {
  if (period.empty()) throw std::invalid_argument("empty period word");
  if (!spec.matcher().has_patterns()) return true;
  // A window of 2*max_word_length + period covers every alignment.
  const std::uint64_t L = spec.basis().max_word_length();
  const std::size_t reps =
      static_cast<std::size_t>((2 * L + period.size()) / period.size() + 2);
  return is_allowed(spec, repeat_word(period, reps));
}

SubshiftSpec parse_basis_text(std::istream& is, const std::string& origin) {
  std::vector<Word> words;
  std::optional<std::uint64_t> gluing;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "N") {
      std::uint64_t n = 0;
      if (!(ls >> n))
        throw std::invalid_argument(origin + ": line " +
                                    std::to_string(lineno) +
                                    ": expected `N <natural>`");
      gluing = n;
      continue;
    }
    try {
      Word w = parse_word(line);
      if (w.empty())
        throw std::invalid_argument("forbidden word must be nonempty");
      words.push_back(std::move(w));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(origin + ": line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  return SubshiftSpec(ForbiddenBasis(std::move(words)), gluing, origin);
}

SubshiftSpec load_basis_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open basis file: " + path);
  return parse_basis_text(is, path);
}

void save_basis_file(const std::string& path, const SubshiftSpec& spec) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write basis file: " + path);
  if (spec.gluing_constant()) os << "N " << *spec.gluing_constant() << '\n';
  for (const Word& w : spec.basis().words()) os << word_to_string(w) << '\n';
}

}  // namespace baire
