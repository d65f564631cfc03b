#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace baire {

/// Alphabet symbol. The alphabet is the naturals; 64 bits is treated as
/// inexhaustible for anything a run can actually touch.
using Symbol = std::uint64_t;

/// Finite word over the alphabet. The empty word is a valid word and acts
/// as the identity for concatenation.
using Word = std::vector<Symbol>;

/// Parses whitespace-separated decimal symbols ("0 1 2").
/// Throws std::invalid_argument on malformed tokens.
Word parse_word(const std::string& text);

std::string word_to_string(const Word& w);

Word concat(const Word& a, const Word& b);
Word repeat_word(const Word& w, std::size_t times);

/// True iff w is not a power of a strictly shorter word.
/// The empty word is not primitive.
bool is_primitive(const Word& w);

}  // namespace baire
