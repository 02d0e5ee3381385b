#ifndef BIMC_FSA_DFA_HPP
#define BIMC_FSA_DFA_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "bimc/core/types.hpp"
#include "bimc/fsa/automaton.hpp"

namespace bimc {

using DfaState = std::uint32_t;
inline constexpr DfaState kNoState = std::numeric_limits<DfaState>::max();

/// Deterministic automaton with a partial transition table.
///
/// `subsets[i]` is the set of source states that DFA state `i` stands for.
/// Subset labels are construction metadata: a DFA read back from its
/// serialized form has none.
struct Dfa {
  std::size_t num_symbols = 0;
  std::size_t num_states = 0;
  DfaState start = 0;
  std::vector<DfaState> table;  // num_states * num_symbols, kNoState when undefined
  std::vector<StateSet> subsets;

  std::optional<DfaState> next(DfaState s, Symbol a) const {
    if (a >= num_symbols) throw std::out_of_range("symbol " + std::to_string(a) + " outside the DFA alphabet");
    DfaState t = table.at(static_cast<std::size_t>(s) * num_symbols + a);
    if (t == kNoState) return std::nullopt;
    return t;
  }

  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (DfaState t : table) n += t != kNoState;
    return n;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// How the start subset of an epsilon power-set construction is formed.
enum class StartSet {
  closure,  // epsilon closure of the initial states
  exact,    // the initial states as given
};

namespace detail {

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return boost::hash_range(s.begin(), s.end()); }
};

class PowerSetBuilder {
 public:
  PowerSetBuilder(const Automaton& a, std::size_t max_states) : a_(a), max_states_(max_states) {
    symbol_succ_.assign(a.num_states * a.num_symbols, {});
    eps_succ_.assign(a.num_states, {});
    for (const auto& e : a.edges) {
      if (e.src >= a.num_states || e.dst >= a.num_states) throw std::invalid_argument("edge state out of range");
      if (e.input == kEpsilon) {
        eps_succ_[e.src].push_back(e.dst);
      } else {
        if (e.input >= a.num_symbols) throw std::invalid_argument("edge symbol out of range");
        symbol_succ_[e.src * a.num_symbols + e.input].push_back(e.dst);
      }
    }
  }

  StateSet closure(const StateSet& s) const {
    std::vector<char> seen(a_.num_states, 0);
    std::vector<State> stack(s.begin(), s.end());
    StateSet out;
    for (State q : s) seen[q] = 1;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      out.push_back(q);
      for (State r : eps_succ_[q])
        if (!seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
    }
    return normalized(std::move(out));
  }

  Dfa run(StateSet start, bool with_epsilon) {
    Dfa d;
    d.num_symbols = a_.num_symbols;
    intern(d, std::move(start));
    for (std::size_t i = 0; i < d.subsets.size(); ++i) {
      const StateSet source = with_epsilon ? closure(d.subsets[i]) : d.subsets[i];
      for (Symbol a = 0; a < a_.num_symbols; ++a) {
        StateSet next;
        for (State q : source) {
          const auto& succ = symbol_succ_[q * a_.num_symbols + a];
          next.insert(next.end(), succ.begin(), succ.end());
        }
        if (next.empty()) continue;
        next = with_epsilon ? closure(normalized(std::move(next))) : normalized(std::move(next));
        DfaState target = intern(d, std::move(next));
        d.table[i * a_.num_symbols + a] = target;
      }
    }
    d.num_states = d.subsets.size();
    if (a_.num_states < 63 && d.num_states > (std::size_t{1} << a_.num_states))
      throw InvariantViolation("power-set automaton exceeds 2^|Q| states");
    return d;
  }

 private:
  DfaState intern(Dfa& d, StateSet s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    if (d.subsets.size() >= max_states_)
      throw StateLimitExceeded("power-set construction exceeds " + std::to_string(max_states_) + " states");
    auto id = static_cast<DfaState>(d.subsets.size());
    index_.emplace(s, id);
    d.subsets.push_back(std::move(s));
    d.table.resize(d.table.size() + a_.num_symbols, kNoState);
    return id;
  }

  const Automaton& a_;
  std::size_t max_states_;
  std::vector<std::vector<State>> symbol_succ_;
  std::vector<std::vector<State>> eps_succ_;
  std::unordered_map<StateSet, DfaState, StateSetHash> index_;
};

}  // namespace detail

/// Accessible-only power-set construction of an epsilon-free automaton.
///
/// States are discovered breadth-first from the initial set; the empty set is
/// never materialized, so undefined transitions mean "leaves the domain".
inline Dfa determinize(const Automaton& a, std::size_t max_states = kNoLimit) {
  if (a.has_epsilon()) throw std::invalid_argument("determinize: automaton has epsilon edges");
  detail::PowerSetBuilder builder(a, max_states);
  return builder.run(a.initial, false);
}

/// Power-set construction over generalized transitions: from subset L on `a`
/// the target is every state reachable by epsilon*, `a`, epsilon*.
inline Dfa determinize_eps(const Automaton& a, StartSet start = StartSet::closure,
                           std::size_t max_states = kNoLimit) {
  detail::PowerSetBuilder builder(a, max_states);
  StateSet s = start == StartSet::closure ? builder.closure(a.initial) : a.initial;
  return builder.run(std::move(s), true);
}

/// Runs `d` over `w`; nothing when a transition is undefined.
inline std::optional<DfaState> run_dfa(const Dfa& d, const Word& w) {
  DfaState s = d.start;
  for (Symbol a : w) {
    auto n = d.next(s, a);
    if (!n) return std::nullopt;
    s = *n;
  }
  return s;
}

}  // namespace bimc

#endif
