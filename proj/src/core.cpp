#include "baire/core.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace baire {

Word parse_word(const std::string& text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j) {
      throw std::invalid_argument("not a decimal symbol: '" +
                                  text.substr(i, j - i) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word repeat_word(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i)
    out.insert(out.end(), w.begin(), w.end());
  return out;
}

bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    bool power = true;
    for (std::size_t i = d; i < n && power; ++i) power = (w[i] == w[i - d]);
    if (power) return false;
  }
  return true;
}

}  // namespace baire
