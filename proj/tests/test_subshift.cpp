#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "baire/subshift.hpp"

using namespace baire;

namespace {

SubshiftSpec spec_01() {
  return SubshiftSpec(ForbiddenBasis({{0, 1}}), std::nullopt, "no 01");
}

// Naive double-loop substring oracle.
bool naive_allowed(const std::vector<Word>& basis, const Word& w) {
  for (const Word& f : basis) {
    if (f.size() > w.size()) continue;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
      if (std::equal(f.begin(), f.end(), w.begin() + i)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_allowed basics") {
  SubshiftSpec s(ForbiddenBasis({{0, 1}, {2, 2}}));
  CHECK(is_allowed(s, {0, 2, 1}));
  CHECK_FALSE(is_allowed(s, {2, 2}));
  CHECK(is_allowed(s, {}));
  CHECK_FALSE(is_allowed(s, {5, 0, 1, 5}));
}

TEST_CASE("forbidden basis rejects the empty word and derives its stats") {
  CHECK_THROWS_AS(ForbiddenBasis({Word{}}), std::invalid_argument);
  ForbiddenBasis b({{3}, {5, 2}});
  CHECK(b.max_word_length() == 2);
  CHECK(b.max_symbol() == 5);
  CHECK_FALSE(ForbiddenBasis{}.max_symbol().has_value());
}

TEST_CASE("safe symbol") {
  CHECK(compute_safe_symbol_K(ForbiddenBasis({{0, 1}})) == 2);
  CHECK(compute_safe_symbol_K(ForbiddenBasis({{3}, {5, 2}})) == 6);
  CHECK(compute_safe_symbol_K(ForbiddenBasis{}) == 0);
}

TEST_CASE("matcher agrees with the naive oracle") {
  std::mt19937_64 rng(2024);
  for (int basis_trial = 0; basis_trial < 30; ++basis_trial) {
    std::vector<Word> basis;
    const int nb = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nb; ++i) {
      Word f(1 + rng() % 3);
      for (auto& s : f) s = rng() % 5;
      basis.push_back(std::move(f));
    }
    SubshiftSpec spec{ForbiddenBasis(basis)};
    // Exhaustive over short words on a small alphabet.
    for (std::uint64_t len = 0; len <= 7; ++len) {
      Word w(len, 0);
      for (std::uint64_t code = 0;; ++code) {
        CHECK(is_allowed(spec, w) == naive_allowed(basis, w));
        std::size_t i = len;
        while (i > 0 && w[i - 1] == 2) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
      }
    }
    // Randomized longer words on the full alphabet {0..4}.
    for (int t = 0; t < 200; ++t) {
      Word w(rng() % 13);
      for (auto& s : w) s = rng() % 5;
      CHECK(is_allowed(spec, w) == naive_allowed(basis, w));
    }
  }
}

TEST_CASE("safe symbol splices allowed words") {
  std::mt19937_64 rng(5);
  SubshiftSpec spec(ForbiddenBasis({{0, 1}, {1, 1, 2}, {4}}));
  const Symbol K = compute_safe_symbol_K(spec.basis());
  CHECK(K == 5);
  int tested = 0;
  while (tested < 200) {
    Word a(rng() % 6), b(rng() % 6);
    for (auto& s : a) s = rng() % 6;
    for (auto& s : b) s = rng() % 6;
    if (!is_allowed(spec, a) || !is_allowed(spec, b)) continue;
    const std::uint64_t n = 1 + rng() % 4;
    Word glued = a;
    glued.insert(glued.end(), n, K);
    glued.insert(glued.end(), b.begin(), b.end());
    CHECK(is_allowed(spec, glued));
    ++tested;
  }
}

TEST_CASE("subword closure of allowedness") {
  std::mt19937_64 rng(6);
  SubshiftSpec spec(ForbiddenBasis({{0, 1}, {2, 2, 2}}));
  int tested = 0;
  while (tested < 100) {
    Word w(2 + rng() % 10);
    for (auto& s : w) s = rng() % 4;
    if (!is_allowed(spec, w)) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i; j <= w.size(); ++j)
        CHECK(is_allowed(spec, Word(w.begin() + i, w.begin() + j)));
    ++tested;
  }
}

TEST_CASE("prefix_in_shift") {
  SubshiftSpec spec = spec_01();
  CHECK(prefix_in_shift(spec, periodic_stream({0, 2}), 10000));
  CHECK_FALSE(prefix_in_shift(spec, file_backed_stream({2, 0, 1, 2, 2}), 3));
  CHECK(prefix_in_shift(SubshiftSpec::full_shift(),
                        seeded_two_symbol_stream(0, 1, 3), 1000));
  // A word that merely starts before n counts, even if it ends at or past n.
  CHECK_FALSE(prefix_in_shift(spec, file_backed_stream({2, 0, 1, 2}), 2));
  CHECK(prefix_in_shift(spec, file_backed_stream({2, 0, 1, 2}), 1));
  CHECK(prefix_in_shift(spec, file_backed_stream({0, 1}), 0));
}

TEST_CASE("gluing instance verdicts") {
  SubshiftSpec full = SubshiftSpec::full_shift(1);
  CHECK(verify_gluing_instance(full, {0}, {7}, {3}) == GluingVerdict::holds);

  SubshiftSpec s(ForbiddenBasis({{0, 1}}), 1);
  CHECK(verify_gluing_instance(s, {0}, {2}, {1}) == GluingVerdict::holds);
  CHECK(verify_gluing_instance(s, {0}, {}, {1}) == GluingVerdict::inapplicable);
  // ab forbidden: not a usable instance.
  CHECK(verify_gluing_instance(s, {0}, {1}, {2}) ==
        GluingVerdict::inapplicable);

  SubshiftSpec no_n(ForbiddenBasis({{0, 1}}));
  CHECK_THROWS_AS(verify_gluing_instance(no_n, {0}, {2}, {1}),
                  std::invalid_argument);
}

TEST_CASE("a declared gluing constant can be falsified") {
  // 0 2 and 2 1 are fine but 0 2 1 is forbidden, so N = 1 is a lie.
  SubshiftSpec s(ForbiddenBasis({{0, 2, 1}}), 1);
  CHECK(verify_gluing_instance(s, {0}, {2}, {1}) == GluingVerdict::violated);
}

TEST_CASE("allowed word enumeration order") {
  SubshiftSpec full = SubshiftSpec::full_shift();
  AllowedWordEnumerator en(full, 1);
  for (Symbol s = 0; s < 6; ++s) CHECK(en.next() == Word{s});

  SubshiftSpec s01 = spec_01();
  CHECK(nth_allowed_word(s01, 2, 0) == Word{0, 0});
  CHECK(nth_allowed_word(s01, 1, 0) == Word{0});
  CHECK(nth_allowed_word(s01, 1, 1) == Word{1});

  SubshiftSpec no0(ForbiddenBasis({{0}}));
  AllowedWordEnumerator en0(no0, 1);
  CHECK(en0.next() == Word{1});
  CHECK(en0.next() == Word{2});
  CHECK(en0.next() == Word{3});
}

TEST_CASE("enumeration emits allowed words once, in canonical order") {
  SubshiftSpec s(ForbiddenBasis({{0, 1}, {2, 0}}));
  AllowedWordEnumerator en(s, 3);
  std::vector<Word> seen;
  for (int i = 0; i < 60; ++i) seen.push_back(en.next());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(is_allowed(s, seen[i]));
    for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
  }
  auto max_sym = [](const Word& w) {
    Symbol m = 0;
    for (Symbol v : w) m = std::max(m, v);
    return m;
  };
  for (std::size_t i = 1; i < seen.size(); ++i) {
    const Symbol a = max_sym(seen[i - 1]), b = max_sym(seen[i]);
    CHECK((a < b || (a == b && seen[i - 1] < seen[i])));
  }
}

TEST_CASE("full-shift enumeration matches direct generation") {
  SubshiftSpec full = SubshiftSpec::full_shift();
  AllowedWordEnumerator en(full, 2);
  // max symbol 0, then 1, then 2; lexicographic inside each block
  const std::vector<Word> expected = {
      {0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2},
      {2, 0}, {2, 1}, {2, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (const Word& w : expected) CHECK(en.next() == w);
}

TEST_CASE("allowed_word_index inverts enumeration") {
  SubshiftSpec s = spec_01();
  for (std::uint64_t g : {0ULL, 1ULL, 5ULL, 17ULL}) {
    Word w = nth_allowed_word(s, 3, g);
    CHECK(allowed_word_index(s, w, 1 << 16) == g);
  }
  CHECK_FALSE(allowed_word_index(s, {0, 1}, 1 << 16).has_value());
}

TEST_CASE("periodic point membership check") {
  SubshiftSpec s = spec_01();
  CHECK(periodic_point_in_shift(s, {0, 2}));
  CHECK(periodic_point_in_shift(s, {2}));
  CHECK_FALSE(periodic_point_in_shift(s, {0, 1, 2}));
  // The forbidden word only appears across the wrap-around.
  CHECK_FALSE(periodic_point_in_shift(s, {1, 2, 0}));
}

TEST_CASE("basis file parsing") {
  std::istringstream is(
      "# comment line\n"
      "N 3\n"
      "\n"
      "0 1\n"
      "2 2 2   # trailing comment\n");
  SubshiftSpec s = parse_basis_text(is, "test");
  CHECK(s.gluing_constant() == 3);
  REQUIRE(s.basis().words().size() == 2);
  CHECK(s.basis().words()[0] == Word{0, 1});
  CHECK(s.basis().words()[1] == Word{2, 2, 2});

  std::istringstream bad("0 1\nnope\n");
  CHECK_THROWS_WITH_AS(parse_basis_text(bad, "test"),
                       doctest::Contains("line 2"), std::invalid_argument);
}
