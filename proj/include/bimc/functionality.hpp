#ifndef BIMC_FUNCTIONALITY_HPP
#define BIMC_FUNCTIONALITY_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimc/core/types.hpp"
#include "bimc/fsa/ops.hpp"
#include "bimc/fsa/transducer.hpp"
#include "bimc/squared/squared_automaton.hpp"

namespace bimc {

/// Reason a transducer was found not to be functional.
enum class FailureKind {
  nonunit_epsilon_cycle,  // an epsilon cycle through `state` has a non-unit output
  ambiguous_epsilon,      // the empty input has more than one output
  not_equalizable,        // rho(pair) has no equalizer
  transition_mismatch,    // x1 m1 y1 != x2 m2 y2 on a squared transition
  nonunit_final,          // nu(final pair) != (e, e)
};

struct Witness {
  FailureKind kind;
  std::optional<State> state;
  std::optional<StatePair> pair;
  std::optional<std::size_t> squared_transition;
  std::string detail;

  std::string describe() const {
    switch (kind) {
      case FailureKind::nonunit_epsilon_cycle:
        return "non-unit epsilon cycle through state " + std::to_string(*state) + detail;
      case FailureKind::ambiguous_epsilon: return "empty input has several outputs" + detail;
      case FailureKind::not_equalizable: return "relevant pair at " + pair_text() + " is not equalizable" + detail;
      case FailureKind::transition_mismatch:
        return "outputs diverge on squared transition " + std::to_string(*squared_transition) + " into " +
               pair_text() + detail;
      case FailureKind::nonunit_final: return "final pair " + pair_text() + " carries unequal outputs" + detail;
    }
    return detail;
  }

 private:
  std::string pair_text() const {
    return "(" + std::to_string(pair->first) + "," + std::to_string(pair->second) + ")";
  }
};

/// Squared automaton of a trimmed transducer together with its valuation.
template <MgeMonoid M>
struct EvaluatedSquared {
  SquaredAutomaton<M> automaton;
  std::vector<char> coaccessible;
  Valuation<M> valuation;
};

template <MgeMonoid M>
EvaluatedSquared<M> evaluated_squared(const Transducer<M>& trimmed) {
  auto a = trimmed.is_real_time() ? squared(trimmed) : squared_eps(trimmed);
  auto c = coaccessible(a);
  auto v = valuation(a, c);
  return {std::move(a), std::move(c), std::move(v)};
}

/// Verdict of `test_functionality`. When the gates before the squared
/// construction reject, `squared` is empty.
template <MgeMonoid M>
struct FunctionalityVerdict {
  bool functional = false;
  std::optional<Witness> witness;
  Trimmed<M> trimmed;
  std::optional<EvaluatedSquared<M>> squared;
  std::optional<ValueOf<M>> epsilon_output;  // the output of the empty input, when it is in the domain
};

/// Finds an epsilon cycle with non-unit output, if any.
///
/// Within each strongly connected component of the epsilon graph, one root
/// gets value e and every other state the output of the first epsilon path
/// reaching it. Given cancellation, all cycles have unit output iff every
/// intra-component edge agrees with these values.
template <MgeMonoid M>
std::optional<State> eps_cycle_check(const Transducer<M>& t) {
  const std::size_t n = t.num_states;
  std::vector<std::vector<std::size_t>> eps_out(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    if (t.transitions[i].is_epsilon()) eps_out[t.transitions[i].src].push_back(i);

  // Tarjan, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<State> stack;
  int counter = 0, comps = 0;
  for (State root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<State, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [q, next] = call.back();
      if (next < eps_out[q].size()) {
        State r = t.transitions[eps_out[q][next++]].dst;
        if (index[r] == -1) {
          index[r] = low[r] = counter++;
          stack.push_back(r);
          on_stack[r] = 1;
          call.push_back({r, 0});
        } else if (on_stack[r]) {
          low[q] = std::min(low[q], index[r]);
        }
        continue;
      }
      State done = q;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        State w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
        } while (w != done);
        ++comps;
      }
    }
  }

  std::vector<std::optional<ValueOf<M>>> value(n);
  for (State root = 0; root < n; ++root) {
    if (value[root]) continue;
    value[root] = t.monoid.unit();
    std::vector<State> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      State q = queue[head];
      for (std::size_t i : eps_out[q]) {
        const auto& tr = t.transitions[i];
        if (comp[tr.dst] != comp[root]) continue;
        auto reached = t.monoid.op(*value[q], tr.output);
        if (!value[tr.dst]) {
          value[tr.dst] = std::move(reached);
          queue.push_back(tr.dst);
        } else if (!(*value[tr.dst] == reached)) {
          return tr.dst;
        }
      }
    }
  }
  return std::nullopt;
}

/// Outputs of successful paths that read no input.
///
/// Requires every epsilon cycle to have unit output (then the set is finite).
template <MgeMonoid M>
std::set<ValueOf<M>> eps_language(const Transducer<M>& t) {
  if (eps_cycle_check(t)) throw std::invalid_argument("eps_language: transducer has a non-unit epsilon cycle");
  using V = ValueOf<M>;
  std::vector<std::vector<const typename Transducer<M>::Transition*>> eps_out(t.num_states);
  for (const auto& tr : t.transitions)
    if (tr.is_epsilon()) eps_out[tr.src].push_back(&tr);
  std::set<std::pair<State, V>> seen;
  std::vector<std::pair<State, V>> queue;
  for (State i : t.initial)
    if (seen.insert({i, t.monoid.unit()}).second) queue.push_back({i, t.monoid.unit()});
  std::set<V> out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [q, v] = queue[head];
    if (t.is_final(q)) out.insert(v);
    for (const auto* tr : eps_out[q]) {
      std::pair<State, V> next{tr->dst, t.monoid.op(v, tr->output)};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

/// Decides functionality of `t` over an effective mge monoid.
///
/// Trims, rejects non-unit epsilon cycles and an ambiguous empty input, then
/// builds the squared automaton with its valuation and checks: nu defined on
/// every co-accessible pair, x1 m1 y1 == x2 m2 y2 on each transition between
/// co-accessible pairs (rho(src) = (x1, x2), nu(dst) = (y1, y2)), and
/// nu = (e, e) on final pairs.
template <MgeMonoid M>
FunctionalityVerdict<M> test_functionality(const Transducer<M>& t) {
  FunctionalityVerdict<M> verdict{false, std::nullopt, trim(t), std::nullopt, std::nullopt};
  const auto& tt = verdict.trimmed.transducer;
  const auto& monoid = tt.monoid;

  if (auto q = eps_cycle_check(tt)) {
    verdict.witness = Witness{FailureKind::nonunit_epsilon_cycle, *q, std::nullopt, std::nullopt, {}};
    return verdict;
  }
  auto eps_out = eps_language(tt);
  if (eps_out.size() > 1) {
    std::string values;
    for (const auto& v : eps_out) values += (values.empty() ? "" : ", ") + monoid.format(v);
    verdict.witness = Witness{FailureKind::ambiguous_epsilon, std::nullopt, std::nullopt, std::nullopt, ": {" + values + "}"};
    return verdict;
  }
  if (!eps_out.empty()) verdict.epsilon_output = *eps_out.begin();

  verdict.squared = evaluated_squared(tt);
  const auto& [a, c, v] = *verdict.squared;

  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!c[k] || !a.is_final[k]) continue;
    if (!v.nu[k]) {
      verdict.witness = Witness{FailureKind::not_equalizable, std::nullopt, a.pairs[k], std::nullopt, {}};
      return verdict;
    }
    if (!(v.nu[k]->first == monoid.unit()) || !(v.nu[k]->second == monoid.unit())) {
      verdict.witness = Witness{FailureKind::nonunit_final, std::nullopt, a.pairs[k], std::nullopt,
                                ": rho=(" + monoid.format(v.rho[k]->first) + "," + monoid.format(v.rho[k]->second) + ")"};
      return verdict;
    }
  }
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const auto& tr = a.transitions[i];
    if (!c[tr.src] || !c[tr.dst]) continue;
    if (!v.nu[tr.dst]) {
      verdict.witness = Witness{FailureKind::not_equalizable, std::nullopt, a.pairs[tr.dst], std::nullopt, {}};
      return verdict;
    }
    const auto& [x1, x2] = *v.rho[tr.src];
    const auto& [y1, y2] = *v.nu[tr.dst];
    if (!(monoid.op(monoid.op(x1, tr.label.first), y1) == monoid.op(monoid.op(x2, tr.label.second), y2))) {
      verdict.witness = Witness{FailureKind::transition_mismatch, std::nullopt, a.pairs[tr.dst], i, {}};
      return verdict;
    }
  }
  verdict.functional = true;
  return verdict;
}

}  // namespace bimc

#endif
