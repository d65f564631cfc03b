#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "baire/point_stream.hpp"

namespace baire {

/// Finite basis of forbidden words. No member may be empty; the empty basis
/// describes the full shift.
class ForbiddenBasis {
 public:
  ForbiddenBasis() = default;
  explicit ForbiddenBasis(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  std::uint64_t max_word_length() const { return max_word_length_; }
  std::optional<Symbol> max_symbol() const { return max_symbol_; }

 private:
  std::vector<Word> words_;
  std::uint64_t max_word_length_ = 0;
  std::optional<Symbol> max_symbol_;
};

/// Aho-Corasick automaton over the countable alphabet. Transitions are kept
/// sparse per node; any symbol larger than every pattern symbol short-cuts
/// to the root, which is the common case when scanning constructed points.
class MultiPatternMatcher {
 public:
  explicit MultiPatternMatcher(const std::vector<Word>& patterns);

  struct State {
    std::uint32_t node = 0;
  };

  /// Advances the state by one symbol and returns the length of the longest
  /// pattern ending at this position (0 if none).
  std::uint64_t feed(State& st, Symbol s) const;

  bool has_patterns() const { return has_patterns_; }

 private:
  struct Node {
    std::unordered_map<Symbol, std::uint32_t> next;
    std::uint32_t fail = 0;
    std::uint64_t best_len = 0;  // longest pattern that is a suffix here
  };
  std::vector<Node> nodes_;
  Symbol max_symbol_ = 0;
  bool has_patterns_ = false;
};

/// A subshift description: a forbidden basis, plus an optional gluing
/// constant N asserting the bounded-type splicing property. The assertion is
/// an input; verify_gluing_instance spot-checks it on concrete words.
class SubshiftSpec {
 public:
  explicit SubshiftSpec(ForbiddenBasis basis,
                        std::optional<std::uint64_t> gluing_constant = {},
                        std::string description = {});

  static SubshiftSpec full_shift(std::optional<std::uint64_t> gluing = 1);

  const ForbiddenBasis& basis() const { return basis_; }
  std::optional<std::uint64_t> gluing_constant() const { return gluing_; }
  const std::string& description() const { return description_; }
  const MultiPatternMatcher& matcher() const { return *matcher_; }

 private:
  ForbiddenBasis basis_;
  std::optional<std::uint64_t> gluing_;
  std::string description_;
  std::shared_ptr<const MultiPatternMatcher> matcher_;
};

/// True iff no basis word occurs inside w. The empty word is always allowed.
bool is_allowed(const SubshiftSpec& spec, const Word& w);

/// 1 + the largest symbol in any basis word; 0 for the empty basis.
/// Every symbol >= the result occurs in no basis word.
Symbol compute_safe_symbol_K(const ForbiddenBasis& basis);

/// Membership evidence on a finite window: no basis word starts before n.
/// Streams x through the matcher once; memory stays bounded by the basis.
bool prefix_in_shift(const SubshiftSpec& spec, const PointStream& x,
                     std::uint64_t n);

enum class GluingVerdict { holds, violated, inapplicable };
const char* gluing_verdict_name(GluingVerdict v);

/// Checks one instance of the splicing rule: with ab, bc allowed and
/// |b| >= N, the spec asserts abc is allowed. A `violated` result falsifies
/// the declared gluing constant. Throws if the spec declares no constant.
GluingVerdict verify_gluing_instance(const SubshiftSpec& spec, const Word& a,
                                     const Word& b, const Word& c);

/// Enumerates the allowed words of length p, each exactly once, ordered by
/// maximum symbol and lexicographically within ties. The stream never ends:
/// words over safe symbols are always allowed.
class AllowedWordEnumerator {
 public:
  AllowedWordEnumerator(const SubshiftSpec& spec, std::uint64_t p);
  Word next();

 private:
  const SubshiftSpec* spec_;
  std::uint64_t p_;
  Symbol block_max_ = 0;   // current max-symbol block
  Word digits_;            // odometer over {0..block_max_}
  bool block_fresh_ = true;
  bool advance_odometer();
};

/// The g-th allowed word of length p in canonical order (g is 0-based).
Word nth_allowed_word(const SubshiftSpec& spec, std::uint64_t p,
                      std::uint64_t g);

/// Enumeration index of w among allowed words of its length, scanning at
/// most scan_cap candidates.
std::optional<std::uint64_t> allowed_word_index(const SubshiftSpec& spec,
                                                const Word& w,
                                                std::uint64_t scan_cap);

/// True iff the periodic point generated by `period` never shows a basis
/// word (checked on a window that covers every alignment).
bool periodic_point_in_shift(const SubshiftSpec& spec, const Word& period);

/// Basis file: one forbidden word per line, decimal symbols separated by
/// spaces; blank lines and `#` comments ignored; an optional line
/// `N <natural>` declares the gluing constant.
SubshiftSpec load_basis_file(const std::string& path);
SubshiftSpec parse_basis_text(std::istream& is, const std::string& origin);
void save_basis_file(const std::string& path, const SubshiftSpec& spec);

}  // namespace baire
