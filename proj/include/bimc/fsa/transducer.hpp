#ifndef BIMC_FSA_TRANSDUCER_HPP
#define BIMC_FSA_TRANSDUCER_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bimc/core/types.hpp"
#include "bimc/monoid/concepts.hpp"

namespace bimc {

/// Monoidal finite-state transducer: input over a finite alphabet (or epsilon),
/// output in the monoid `M`.
template <MgeMonoid M>
struct Transducer {
  using value_type = ValueOf<M>;

  struct Transition {
    State src;
    Symbol input;  // kEpsilon for an epsilon move
    value_type output;
    State dst;

    bool is_epsilon() const { return input == kEpsilon; }
    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition& a, const Transition& b) {
      return std::tie(a.src, a.input, a.output, a.dst) <=> std::tie(b.src, b.input, b.output, b.dst);
    }
  };

  M monoid;
  Alphabet alphabet;
  std::size_t num_states = 0;
  StateSet initial;
  StateSet final;
  std::vector<Transition> transitions;

  bool is_real_time() const {
    return std::none_of(transitions.begin(), transitions.end(), [](const Transition& t) { return t.is_epsilon(); });
  }

  bool is_final(State q) const { return contains(final, q); }
  bool is_initial(State q) const { return contains(initial, q); }

  /// Throws std::invalid_argument when an index, symbol or output is out of range.
  void validate() const {
    auto check_state = [&](State q) {
      if (q >= num_states) throw std::invalid_argument("state " + std::to_string(q) + " out of range");
    };
    for (State q : initial) check_state(q);
    for (State q : final) check_state(q);
    if (!std::is_sorted(initial.begin(), initial.end()) || !std::is_sorted(final.begin(), final.end()))
      throw std::invalid_argument("initial/final sets must be sorted");
    for (const auto& t : transitions) {
      check_state(t.src);
      check_state(t.dst);
      if (t.input != kEpsilon && t.input >= alphabet.size())
        throw std::invalid_argument("input symbol " + std::to_string(t.input) + " out of range");
      if (!monoid.contains(t.output)) throw std::invalid_argument("transition output outside the output monoid");
    }
  }

  friend bool operator==(const Transducer& a, const Transducer& b) {
    return a.monoid == b.monoid && a.alphabet == b.alphabet && a.num_states == b.num_states &&
           a.initial == b.initial && a.final == b.final && a.transitions == b.transitions;
  }
};

/// Removes duplicate transitions (keeps the first occurrence); returns how many were dropped.
template <MgeMonoid M>
std::size_t remove_duplicate_transitions(Transducer<M>& t) {
  std::vector<typename Transducer<M>::Transition> kept;
  std::vector<typename Transducer<M>::Transition> seen;
  for (auto& tr : t.transitions) {
    auto it = std::lower_bound(seen.begin(), seen.end(), tr);
    if (it != seen.end() && *it == tr) continue;
    seen.insert(it, tr);
    kept.push_back(tr);
  }
  std::size_t dropped = t.transitions.size() - kept.size();
  t.transitions = std::move(kept);
  return dropped;
}

}  // namespace bimc

#endif
