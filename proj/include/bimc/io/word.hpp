#ifndef BIMC_IO_WORD_HPP
#define BIMC_IO_WORD_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bimc/core/types.hpp"

namespace bimc {

/// Splits `text` into alphabet symbols. Spaces or commas separate tokens when
/// present; otherwise the text is segmented greedily (longest token first),
/// backtracking when a choice leads nowhere. Empty text is the empty word.
inline Word tokenize_word(const Alphabet& alphabet, std::string_view text) {
  Word out;
  if (text.find_first_of(" ,\t") != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t') ++j;
      if (j > i) {
        auto s = alphabet.find(text.substr(i, j - i));
        if (!s) throw std::invalid_argument("unknown input symbol '" + std::string(text.substr(i, j - i)) + "'");
        out.push_back(*s);
      }
      i = j;
    }
    return out;
  }

  std::size_t longest = 0;
  for (const auto& tok : alphabet.tokens()) longest = std::max(longest, tok.size());
  std::vector<char> dead(text.size() + 1, 0);
  auto segment = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == text.size()) return true;
    if (dead[pos]) return false;
    for (std::size_t len = std::min(longest, text.size() - pos); len > 0; --len) {
      auto s = alphabet.find(text.substr(pos, len));
      if (!s) continue;
      out.push_back(*s);
      if (self(self, pos + len)) return true;
      out.pop_back();
    }
    dead[pos] = 1;
    return false;
  };
  if (!segment(segment, 0)) throw std::invalid_argument("cannot split '" + std::string(text) + "' into input symbols");
  return out;
}

inline std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.token(w[i]);
  }
  return out;
}

}  // namespace bimc

#endif
