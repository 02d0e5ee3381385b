#ifndef BIMC_CORE_TYPES_HPP
#define BIMC_CORE_TYPES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bimc {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// Input label of an epsilon transition.
inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

using StatePair = std::pair<State, State>;

inline StateSet normalized(StateSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const StateSet& s, State q) {
  return std::binary_search(s.begin(), s.end(), q);
}

/// Input alphabet: printable tokens interned as dense symbol indices.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (Symbol i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].empty()) throw std::invalid_argument("empty alphabet token");
      if (!index_.emplace(tokens_[i], i).second)
        throw std::invalid_argument("duplicate alphabet token '" + tokens_[i] + "'");
    }
  }

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<Symbol> find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

using Word = std::vector<Symbol>;

/// Raised when two values of different monoids meet in one operation.
class DescriptorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A power-set construction exceeded the configured state cap.
class StateLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Indicates a bug or an input that violates a precondition.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bimc

#endif
