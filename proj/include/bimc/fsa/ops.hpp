#ifndef BIMC_FSA_OPS_HPP
#define BIMC_FSA_OPS_HPP

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "bimc/core/types.hpp"
#include "bimc/fsa/transducer.hpp"

namespace bimc {

template <MgeMonoid M>
struct Trimmed {
  Transducer<M> transducer;
  std::vector<std::optional<State>> renumbering;  // old state -> new state
};

namespace detail {

inline std::vector<char> reachable(std::size_t n, const StateSet& seeds, const std::vector<std::vector<State>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<State> stack;
  for (State q : seeds)
    if (!seen[q]) {
      seen[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State r : adj[q])
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
  }
  return seen;
}

}  // namespace detail

/// Restricts `t` to states that are both accessible and co-accessible,
/// renumbering the survivors in increasing order of their old index.
template <MgeMonoid M>
Trimmed<M> trim(const Transducer<M>& t) {
  std::vector<std::vector<State>> fwd(t.num_states), bwd(t.num_states);
  for (const auto& tr : t.transitions) {
    fwd[tr.src].push_back(tr.dst);
    bwd[tr.dst].push_back(tr.src);
  }
  auto acc = detail::reachable(t.num_states, t.initial, fwd);
  auto coacc = detail::reachable(t.num_states, t.final, bwd);

  Trimmed<M> out{Transducer<M>{t.monoid, t.alphabet, 0, {}, {}, {}}, std::vector<std::optional<State>>(t.num_states)};
  for (State q = 0; q < t.num_states; ++q)
    if (acc[q] && coacc[q]) out.renumbering[q] = static_cast<State>(out.transducer.num_states++);
  for (State q : t.initial)
    if (out.renumbering[q]) out.transducer.initial.push_back(*out.renumbering[q]);
  for (State q : t.final)
    if (out.renumbering[q]) out.transducer.final.push_back(*out.renumbering[q]);
  for (const auto& tr : t.transitions) {
    auto s = out.renumbering[tr.src];
    auto d = out.renumbering[tr.dst];
    if (s && d) out.transducer.transitions.push_back({*s, tr.input, tr.output, *d});
  }
  return out;
}

/// Adds a unit-output epsilon loop on every state that lacks one.
template <MgeMonoid M>
Transducer<M> e_extend(const Transducer<M>& t) {
  Transducer<M> out = t;
  const auto e = t.monoid.unit();
  for (State q = 0; q < t.num_states; ++q) {
    typename Transducer<M>::Transition loop{q, kEpsilon, e, q};
    if (std::find(out.transitions.begin(), out.transitions.end(), loop) == out.transitions.end())
      out.transitions.push_back(loop);
  }
  return out;
}

/// Default path-length bound for `enumerate_outputs`: 2 |Q| (|u| + 1).
template <MgeMonoid M>
std::size_t default_path_bound(const Transducer<M>& t, std::size_t word_length) {
  return 2 * t.num_states * (word_length + 1);
}

/// Brute-force path oracle: outputs of all successful paths reading exactly
/// `u` with at most `max_path_len` transitions (epsilon moves included).
template <MgeMonoid M>
std::set<ValueOf<M>> enumerate_outputs(const Transducer<M>& t, const Word& u, std::size_t max_path_len) {
  using V = ValueOf<M>;
  struct Config {
    State q;
    std::size_t pos;
    V out;
    bool operator<(const Config& o) const { return std::tie(q, pos, out) < std::tie(o.q, o.pos, o.out); }
  };
  std::vector<std::vector<const typename Transducer<M>::Transition*>> out_edges(t.num_states);
  for (const auto& tr : t.transitions) out_edges[tr.src].push_back(&tr);

  std::set<V> results;
  std::set<Config> frontier;
  for (State i : t.initial) frontier.insert({i, 0, t.monoid.unit()});
  for (std::size_t step = 0;; ++step) {
    for (const auto& c : frontier)
      if (c.pos == u.size() && t.is_final(c.q)) results.insert(c.out);
    if (step == max_path_len || frontier.empty()) break;
    std::set<Config> next;
    for (const auto& c : frontier) {
      for (const auto* tr : out_edges[c.q]) {
        if (tr->input == kEpsilon) {
          next.insert({tr->dst, c.pos, t.monoid.op(c.out, tr->output)});
        } else if (c.pos < u.size() && tr->input == u[c.pos]) {
          next.insert({tr->dst, c.pos + 1, t.monoid.op(c.out, tr->output)});
        }
      }
    }
    frontier = std::move(next);
  }
  return results;
}

template <MgeMonoid M>
std::set<ValueOf<M>> enumerate_outputs(const Transducer<M>& t, const Word& u) {
  return enumerate_outputs(t, u, default_path_bound(t, u.size()));
}

}  // namespace bimc

#endif
