#ifndef BIMC_MONOID_FREE_MONOID_HPP
#define BIMC_MONOID_FREE_MONOID_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "bimc/core/types.hpp"

namespace bimc {

/// Free monoid over a finite alphabet of single printable characters.
///
/// Words are stored as interned symbol indices; `symbols()` maps them back.
class FreeMonoid {
 public:
  using value_type = Word;

  FreeMonoid() : FreeMonoid("a") {}

  explicit FreeMonoid(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("free monoid needs a non-empty alphabet");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!is_valid_symbol(symbols_[i]))
        throw std::invalid_argument(std::string("invalid output symbol '") + symbols_[i] + "'");
      if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
        throw std::invalid_argument(std::string("duplicate output symbol '") + symbols_[i] + "'");
    }
  }

  static bool is_valid_symbol(char c) {
    return c > ' ' && c < 127 && c != '"' && c != '\\' && c != '(' && c != ')' && c != ',' && c != '#';
  }

  const std::string& symbols() const { return symbols_; }
  std::size_t alphabet_size() const { return symbols_.size(); }

  value_type unit() const { return {}; }

  value_type op(const value_type& a, const value_type& b) const {
    value_type r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
  }

  /// The mge of a prefix-comparable pair is (suffix, unit) or (unit, suffix).
  std::optional<std::pair<value_type, value_type>> eta(const value_type& a, const value_type& b) const {
    if (a == b) return std::pair{unit(), unit()};
    if (is_prefix(a, b)) return std::pair{value_type(b.begin() + a.size(), b.end()), unit()};
    if (is_prefix(b, a)) return std::pair{unit(), value_type(a.begin() + b.size(), a.end())};
    return std::nullopt;
  }

  std::optional<value_type> inverse(const value_type& a) const {
    if (a.empty()) return unit();
    return std::nullopt;
  }

  bool contains(const value_type& a) const {
    return std::all_of(a.begin(), a.end(), [&](Symbol s) { return s < symbols_.size(); });
  }

  std::string format(const value_type& a) const {
    std::string out = "\"";
    for (Symbol s : a) out += symbols_.at(s);
    out += '"';
    return out;
  }

  /// Converts printable text to a word; throws on characters outside the alphabet.
  value_type word(std::string_view text) const {
    value_type w;
    w.reserve(text.size());
    for (char c : text) {
      auto pos = symbols_.find(c);
      if (pos == std::string::npos)
        throw std::invalid_argument(std::string("symbol '") + c + "' not in output alphabet \"" + symbols_ + "\"");
      w.push_back(static_cast<Symbol>(pos));
    }
    return w;
  }

  friend bool operator==(const FreeMonoid& a, const FreeMonoid& b) { return a.symbols_ == b.symbols_; }

 private:
  static bool is_prefix(const value_type& p, const value_type& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  std::string symbols_;
};

}  // namespace bimc

#endif
