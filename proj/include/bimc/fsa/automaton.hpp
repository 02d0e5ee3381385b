#ifndef BIMC_FSA_AUTOMATON_HPP
#define BIMC_FSA_AUTOMATON_HPP

#include <algorithm>
#include <tuple>
#include <vector>

#include "bimc/core/types.hpp"
#include "bimc/fsa/transducer.hpp"

namespace bimc {

/// Unweighted nondeterministic automaton; edges may carry kEpsilon.
struct Automaton {
  struct Edge {
    State src;
    Symbol input;
    State dst;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
      return std::tie(a.src, a.input, a.dst) <=> std::tie(b.src, b.input, b.dst);
    }
  };

  std::size_t num_symbols = 0;
  std::size_t num_states = 0;
  StateSet initial;
  StateSet final;
  std::vector<Edge> edges;

  bool has_epsilon() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.input == kEpsilon; });
  }

  friend bool operator==(const Automaton&, const Automaton&) = default;
};

/// Underlying input automaton: outputs dropped, (src, input, dst) deduplicated.
template <MgeMonoid M>
Automaton project_input(const Transducer<M>& t) {
  Automaton a;
  a.num_symbols = t.alphabet.size();
  a.num_states = t.num_states;
  a.initial = t.initial;
  a.final = t.final;
  a.edges.reserve(t.transitions.size());
  for (const auto& tr : t.transitions) a.edges.push_back({tr.src, tr.input, tr.dst});
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  return a;
}

/// Flips every edge and swaps initial with final states.
inline Automaton reverse(const Automaton& a) {
  Automaton r;
  r.num_symbols = a.num_symbols;
  r.num_states = a.num_states;
  r.initial = a.final;
  r.final = a.initial;
  r.edges.reserve(a.edges.size());
  for (const auto& e : a.edges) r.edges.push_back({e.dst, e.input, e.src});
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

}  // namespace bimc

#endif
