#ifndef BIMC_COMPILER_EQUALIZER_HPP
#define BIMC_COMPILER_EQUALIZER_HPP

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimc/bimachine.hpp"
#include "bimc/core/types.hpp"
#include "bimc/fsa/automaton.hpp"
#include "bimc/fsa/dfa.hpp"
#include "bimc/functionality.hpp"
#include "bimc/monoid/accumulate.hpp"

namespace bimc {

/// The input transducer is not functional (or an mge step failed).
class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TransitionChoice { first, last };

struct CompileOptions {
  std::size_t max_states = kNoLimit;
  bool verify_well_defined = true;
  TransitionChoice choice = TransitionChoice::first;
};

struct CompileStats {
  std::size_t left_states = 0;
  std::size_t right_states = 0;
  std::size_t psi_entries = 0;
  std::size_t intermediate_states = 0;  // classical construction only
  std::size_t well_defined_checks = 0;
  std::size_t well_defined_violations = 0;
  double build_ms = 0;
};

/// Equalizer accumulation over the nu chain of `s` in ascending order:
/// phi_S(p_1..p_k) = gamma_k(nu(p_1, p_2), .., nu(p_{k-1}, p_k)).
template <MgeMonoid M>
std::vector<ValueOf<M>> set_mge(const EvaluatedSquared<M>& sq, const StateSet& s) {
  if (s.empty()) throw std::invalid_argument("set_mge: empty state set");
  std::vector<PairOf<M>> chain;
  chain.reserve(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    auto idx = sq.automaton.find({s[k], s[k + 1]});
    if (!idx || !sq.coaccessible[*idx] || !sq.valuation.nu[*idx])
      throw CompileError("no equalizer for state pair (" + std::to_string(s[k]) + "," + std::to_string(s[k + 1]) + ")");
    chain.push_back(*sq.valuation.nu[*idx]);
  }
  auto phi = gamma_n(sq.automaton.monoid, std::span<const PairOf<M>>(chain));
  if (!phi) throw CompileError("equalizer accumulation failed");
  return *phi;
}

namespace detail {

inline StateSet intersect(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <MgeMonoid M>
class EqualizerCompiler {
 public:
  using V = ValueOf<M>;
  using Tr = typename Transducer<M>::Transition;

  EqualizerCompiler(const FunctionalityVerdict<M>& verdict, const CompileOptions& opts)
      : t_(verdict.trimmed.transducer), sq_(*verdict.squared), opts_(opts) {
    by_symbol_.assign(t_.num_states, std::vector<std::vector<std::size_t>>(t_.alphabet.size()));
    by_eps_.assign(t_.num_states, {});
    for (std::size_t i = 0; i < t_.transitions.size(); ++i) {
      const auto& tr = t_.transitions[i];
      if (tr.is_epsilon())
        by_eps_[tr.src].push_back(i);
      else
        by_symbol_[tr.src][tr.input].push_back(i);
    }
  }

  Bimachine<M> run(const std::optional<V>& epsilon_output, CompileStats& stats) {
    Automaton a = project_input(t_);
    Bimachine<M> b{t_.monoid, t_.alphabet, {}, {}, {}, epsilon_output};
    if (t_.is_real_time()) {
      b.left = determinize(a, opts_.max_states);
      b.right = determinize(reverse(a), opts_.max_states);
    } else {
      b.left = determinize_eps(a, StartSet::exact, opts_.max_states);
      b.right = determinize_eps(reverse(a), StartSet::exact, opts_.max_states);
    }

    for (DfaState l = 0; l < b.left.num_states; ++l)
      for (Symbol x = 0; x < t_.alphabet.size(); ++x) {
        auto l2 = b.left.next(l, x);
        if (!l2) continue;
        for (DfaState r2 = 0; r2 < b.right.num_states; ++r2) {
          auto r = b.right.next(r2, x);
          if (!r) continue;
          StateSet s = intersect(b.left.subsets[l], b.right.subsets[*r]);
          if (s.empty()) continue;
          StateSet s2 = intersect(b.left.subsets[*l2], b.right.subsets[r2]);
          if (s2.empty()) continue;
          b.psi.emplace(PsiKey{l, x, r2}, output_value(s, x, s2, stats));
        }
      }
    stats.left_states = b.left.num_states;
    stats.right_states = b.right.num_states;
    stats.psi_entries = b.psi.size();
    return b;
  }

 private:
  struct Step {
    State src;
    V output;
    State dst;
  };

  const std::vector<V>& phi(const StateSet& s) {
    auto it = phi_.find(s);
    if (it == phi_.end()) it = phi_.emplace(s, set_mge(sq_, s)).first;
    return it->second;
  }

  const V& phi_at(const StateSet& s, State p) {
    const auto& values = phi(s);
    return values[std::lower_bound(s.begin(), s.end(), p) - s.begin()];
  }

  // Ordinary x-transitions from S into S', in transition order.
  std::vector<Step> ordinary_steps(const StateSet& s, Symbol x, const StateSet& s2) const {
    std::vector<std::size_t> idx;
    for (State p : s)
      for (std::size_t i : by_symbol_[p][x])
        if (contains(s2, t_.transitions[i].dst)) idx.push_back(i);
    std::sort(idx.begin(), idx.end());
    std::vector<Step> steps;
    for (std::size_t i : idx) steps.push_back({t_.transitions[i].src, t_.transitions[i].output, t_.transitions[i].dst});
    return steps;
  }

  // Generalized transitions (epsilon* x epsilon*) from S into S', one output per endpoint pair.
  std::vector<Step> generalized_steps(const StateSet& s, Symbol x, const StateSet& s2) const {
    std::vector<Step> steps;
    for (State p : s) {
      std::map<std::pair<State, int>, V> seen;
      std::vector<std::pair<State, int>> queue;
      auto visit = [&](State q, int phase, V out) {
        if (seen.emplace(std::pair{q, phase}, out).second) queue.push_back({q, phase});
      };
      visit(p, 0, t_.monoid.unit());
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [q, phase] = queue[head];
        const V cur = seen.at({q, phase});
        for (std::size_t i : by_eps_[q]) visit(t_.transitions[i].dst, phase, t_.monoid.op(cur, t_.transitions[i].output));
        if (phase == 0)
          for (std::size_t i : by_symbol_[q][x]) visit(t_.transitions[i].dst, 1, t_.monoid.op(cur, t_.transitions[i].output));
      }
      for (const auto& [key, out] : seen)
        if (key.second == 1 && contains(s2, key.first)) steps.push_back({p, out, key.first});
    }
    return steps;
  }

  V output_value(const StateSet& s, Symbol x, const StateSet& s2, CompileStats& stats) {
    auto steps = ordinary_steps(s, x, s2);
    if (steps.empty() && !t_.is_real_time()) steps = generalized_steps(s, x, s2);
    if (steps.empty()) throw InvariantViolation("no transition between intersection sets");
    const Step& chosen = opts_.choice == TransitionChoice::first ? steps.front() : steps.back();
    const auto& monoid = t_.monoid;
    auto c = solve_right(monoid, phi_at(s, chosen.src), monoid.op(chosen.output, phi_at(s2, chosen.dst)));
    if (!c) throw InvariantViolation("output equation has no solution");
    if (opts_.verify_well_defined) {
      for (const auto& step : steps) {
        ++stats.well_defined_checks;
        if (!(monoid.op(phi_at(s, step.src), *c) == monoid.op(step.output, phi_at(s2, step.dst))))
          ++stats.well_defined_violations;
      }
    }
    return *c;
  }

  const Transducer<M>& t_;
  const EvaluatedSquared<M>& sq_;
  CompileOptions opts_;
  std::vector<std::vector<std::vector<std::size_t>>> by_symbol_;
  std::vector<std::vector<std::size_t>> by_eps_;
  std::map<StateSet, std::vector<V>> phi_;
};

}  // namespace detail

/// Builds a bimachine from a functional verdict, reusing its squared
/// automaton and valuation. Throws CompileError for a non-functional verdict.
template <MgeMonoid M>
Bimachine<M> compile(const FunctionalityVerdict<M>& verdict, const CompileOptions& opts = {},
                     CompileStats* stats = nullptr) {
  if (!verdict.functional)
    throw CompileError("transducer is not functional: " + (verdict.witness ? verdict.witness->describe() : std::string("?")));
  auto start = std::chrono::steady_clock::now();
  CompileStats local;
  auto b = detail::EqualizerCompiler<M>(verdict, opts).run(verdict.epsilon_output, local);
  local.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (stats) *stats = local;
  return b;
}

template <MgeMonoid M>
Bimachine<M> compile(const Transducer<M>& t, const CompileOptions& opts = {}, CompileStats* stats = nullptr) {
  auto start = std::chrono::steady_clock::now();
  auto verdict = test_functionality(t);
  auto b = compile(verdict, opts, stats);
  if (stats)
    stats->build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return b;
}

}  // namespace bimc

#endif
