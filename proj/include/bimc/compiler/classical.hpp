#ifndef BIMC_COMPILER_CLASSICAL_HPP
#define BIMC_COMPILER_CLASSICAL_HPP

#include <chrono>
#include <map>
#include <set>
#include <type_traits>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bimc/bimachine.hpp"
#include "bimc/compiler/equalizer.hpp"
#include "bimc/fsa/automaton.hpp"
#include "bimc/fsa/dfa.hpp"
#include "bimc/fsa/ops.hpp"
#include "bimc/monoid/descriptor.hpp"
#include "bimc/monoid/free_monoid.hpp"

namespace bimc {

namespace detail {

template <MgeMonoid M>
void require_free_outputs(const M& monoid) {
  if constexpr (std::is_same_v<M, MonoidDescriptor>) {
    if (monoid.kind() != MonoidDescriptor::Kind::free)
      throw DescriptorMismatch("classical construction needs free-monoid outputs, got " + monoid.literal());
  } else {
    static_assert(std::is_same_v<M, FreeMonoid>, "classical construction needs free-monoid outputs");
  }
}

}  // namespace detail

/// True iff `t` has one initial state, no epsilon moves, and at most one
/// target per (state, symbol, output word).
template <MgeMonoid M>
bool check_pseudo_deterministic(const Transducer<M>& t) {
  detail::require_free_outputs(t.monoid);
  if (t.initial.size() != 1 || !t.is_real_time()) return false;
  std::map<std::tuple<State, Symbol, ValueOf<M>>, State> target;
  for (const auto& tr : t.transitions) {
    auto [it, inserted] = target.emplace(std::tuple{tr.src, tr.input, tr.output}, tr.dst);
    if (!inserted && it->second != tr.dst) return false;
  }
  return true;
}

/// Unambiguous transducer T' with states (positive state, negative set).
template <MgeMonoid M>
struct ExpandedTransducer {
  Transducer<M> transducer;
  std::vector<std::pair<State, StateSet>> labels;  // state of T' -> (p, N)
};

/// Guessed-positive-state expansion: from (p, N) a transition (p, (a, v), p')
/// leads to (p', N') with N' = a-successors of N plus the targets of
/// lexicographically smaller a-outputs at p, provided p' is not in N'.
/// Finals are (f, N) with N free of final states. The result is trimmed.
template <MgeMonoid M>
ExpandedTransducer<M> unambiguous_expand(const Transducer<M>& t, std::size_t max_states = kNoLimit) {
  if (!check_pseudo_deterministic(t)) throw std::invalid_argument("unambiguous_expand: transducer is not pseudo-deterministic");
  using Tr = typename Transducer<M>::Transition;
  std::vector<std::vector<std::vector<const Tr*>>> by_symbol(t.num_states, std::vector<std::vector<const Tr*>>(t.alphabet.size()));
  for (const auto& tr : t.transitions) by_symbol[tr.src][tr.input].push_back(&tr);

  Transducer<M> raw{t.monoid, t.alphabet, 0, {}, {}, {}};
  std::vector<std::pair<State, StateSet>> labels;
  std::map<std::pair<State, StateSet>, State> index;
  auto intern = [&](std::pair<State, StateSet> key) {
    auto [it, inserted] = index.emplace(key, static_cast<State>(labels.size()));
    if (inserted) {
      if (labels.size() >= max_states)
        throw StateLimitExceeded("expanded transducer exceeds " + std::to_string(max_states) + " states");
      labels.push_back(std::move(key));
    }
    return it->second;
  };
  intern({t.initial.front(), {}});
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto [p, n] = labels[k];
    for (Symbol a = 0; a < t.alphabet.size(); ++a) {
      StateSet succ_n;
      for (State q : n)
        for (const Tr* tr : by_symbol[q][a]) succ_n.push_back(tr->dst);
      for (const Tr* tr : by_symbol[p][a]) {
        StateSet n2 = succ_n;
        for (const Tr* alt : by_symbol[p][a])
          if (alt->output < tr->output) n2.push_back(alt->dst);
        n2 = normalized(std::move(n2));
        if (contains(n2, tr->dst)) continue;
        State dst = intern({tr->dst, std::move(n2)});
        raw.transitions.push_back({static_cast<State>(k), a, tr->output, dst});
      }
    }
  }
  raw.num_states = labels.size();
  raw.initial = {0};
  for (State k = 0; k < labels.size(); ++k) {
    const auto& [p, n] = labels[k];
    if (t.is_final(p) && std::none_of(n.begin(), n.end(), [&](State q) { return t.is_final(q); })) raw.final.push_back(k);
  }

  auto trimmed = trim(raw);
  ExpandedTransducer<M> out{std::move(trimmed.transducer), {}};
  out.labels.resize(out.transducer.num_states);
  for (State k = 0; k < labels.size(); ++k)
    if (trimmed.renumbering[k]) out.labels[*trimmed.renumbering[k]] = labels[k];
  return out;
}

namespace detail {

inline std::vector<boost::dynamic_bitset<>> subset_bits(const Dfa& d, std::size_t n) {
  std::vector<boost::dynamic_bitset<>> bits(d.num_states, boost::dynamic_bitset<>(n));
  for (DfaState s = 0; s < d.num_states; ++s)
    for (State q : d.subsets[s]) bits[s].set(q);
  return bits;
}

}  // namespace detail

/// Bimachine of the expanded transducer: psi(L, a, R') is the output of the
/// unique T' transition p -> p' with p in L and delta_R(R', a), p' in
/// delta_L(L, a) and R'.
template <MgeMonoid M>
Bimachine<M> classical_compile(const Transducer<M>& t, const CompileOptions& opts = {}, CompileStats* stats = nullptr) {
  auto start = std::chrono::steady_clock::now();
  Transducer<M> input = t;
  remove_duplicate_transitions(input);
  if (!check_pseudo_deterministic(input)) throw std::invalid_argument("classical_compile: transducer is not pseudo-deterministic");
  auto trimmed = trim(input).transducer;
  auto expanded = trimmed.initial.empty() ? ExpandedTransducer<M>{std::move(trimmed), {}}
                                          : unambiguous_expand(trimmed, opts.max_states);
  const auto& tp = expanded.transducer;
  Automaton a = project_input(tp);
  Bimachine<M> b{tp.monoid, tp.alphabet, determinize(a, opts.max_states), determinize(reverse(a), opts.max_states), {}, {}};
  for (State i : tp.initial)
    if (tp.is_final(i)) b.epsilon_output = tp.monoid.unit();

  const std::size_t n = tp.num_states;
  auto left_bits = detail::subset_bits(b.left, n);
  auto right_bits = detail::subset_bits(b.right, n);
  std::vector<std::vector<std::vector<std::size_t>>> by_symbol(n, std::vector<std::vector<std::size_t>>(tp.alphabet.size()));
  for (std::size_t i = 0; i < tp.transitions.size(); ++i) by_symbol[tp.transitions[i].src][tp.transitions[i].input].push_back(i);

  for (DfaState l = 0; l < b.left.num_states; ++l)
    for (Symbol x = 0; x < tp.alphabet.size(); ++x) {
      auto l2 = b.left.next(l, x);
      if (!l2) continue;
      for (DfaState r2 = 0; r2 < b.right.num_states; ++r2) {
        auto r = b.right.next(r2, x);
        if (!r) continue;
        auto s = left_bits[l] & right_bits[*r];
        if (s.none()) continue;
        auto s2 = left_bits[*l2] & right_bits[r2];
        const ValueOf<M>* found = nullptr;
        for (auto p = s.find_first(); p != boost::dynamic_bitset<>::npos; p = s.find_next(p))
          for (std::size_t i : by_symbol[p][x]) {
            if (!s2.test(tp.transitions[i].dst)) continue;
            if (found) throw InvariantViolation("expanded transducer is ambiguous");
            found = &tp.transitions[i].output;
          }
        if (found) b.psi.emplace(PsiKey{l, x, r2}, *found);
      }
    }

  if (stats) {
    *stats = CompileStats{};
    stats->left_states = b.left.num_states;
    stats->right_states = b.right.num_states;
    stats->psi_entries = b.psi.size();
    stats->intermediate_states = tp.num_states;
    stats->build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return b;
}

}  // namespace bimc

#endif
