#ifndef BIMC_SQUARED_SQUARED_AUTOMATON_HPP
#define BIMC_SQUARED_SQUARED_AUTOMATON_HPP

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "bimc/core/types.hpp"
#include "bimc/fsa/transducer.hpp"

namespace bimc {

/// Automaton over state pairs whose paths carry the output pair of two
/// same-input paths of the source transducer.
///
/// Pairs are stored in breadth-first discovery order; the first
/// `num_initial` of them are I x I. Only pairs accessible from I x I exist.
template <MgeMonoid M>
struct SquaredAutomaton {
  using Label = PairOf<M>;

  struct Transition {
    std::size_t src;
    Label label;
    std::size_t dst;
  };

  M monoid;
  std::vector<StatePair> pairs;
  std::size_t num_initial = 0;
  std::vector<char> is_final;
  std::vector<Transition> transitions;       // grouped by src, in processing order
  std::vector<std::size_t> first_transition;  // transitions of pair i: [first[i], first[i+1])
  std::map<StatePair, std::size_t> index;

  std::size_t size() const { return pairs.size(); }
  bool is_initial(std::size_t i) const { return i < num_initial; }

  std::optional<std::size_t> find(StatePair p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

template <MgeMonoid M>
class SquaredBuilder {
 public:
  using Sq = SquaredAutomaton<M>;
  using Tr = typename Transducer<M>::Transition;

  explicit SquaredBuilder(const Transducer<M>& t) : t_(t) {
    by_symbol_.assign(t.num_states, std::vector<std::vector<const Tr*>>(t.alphabet.size()));
    by_eps_.assign(t.num_states, {});
    for (const auto& tr : t.transitions) {
      if (tr.is_epsilon())
        by_eps_[tr.src].push_back(&tr);
      else
        by_symbol_[tr.src][tr.input].push_back(&tr);
    }
  }

  Sq build(bool one_sided_epsilon) {
    Sq sq{t_.monoid, {}, 0, {}, {}, {}, {}};
    for (State i1 : t_.initial)
      for (State i2 : t_.initial) intern(sq, {i1, i2});
    sq.num_initial = sq.pairs.size();
    const auto e = t_.monoid.unit();
    for (std::size_t k = 0; k < sq.pairs.size(); ++k) {
      sq.first_transition.push_back(sq.transitions.size());
      const auto [p1, p2] = sq.pairs[k];
      for (Symbol a = 0; a < t_.alphabet.size(); ++a)
        for (const Tr* t1 : by_symbol_[p1][a])
          for (const Tr* t2 : by_symbol_[p2][a]) add(sq, k, {t1->dst, t2->dst}, {t1->output, t2->output});
      if (!one_sided_epsilon) continue;
      for (const Tr* t2 : by_eps_[p2]) add(sq, k, {p1, t2->dst}, {e, t2->output});
      for (const Tr* t1 : by_eps_[p1]) add(sq, k, {t1->dst, p2}, {t1->output, e});
    }
    sq.first_transition.push_back(sq.transitions.size());
    sq.is_final.resize(sq.pairs.size());
    for (std::size_t k = 0; k < sq.pairs.size(); ++k)
      sq.is_final[k] = t_.is_final(sq.pairs[k].first) && t_.is_final(sq.pairs[k].second);
    return sq;
  }

 private:
  std::size_t intern(Sq& sq, StatePair p) {
    auto [it, inserted] = sq.index.emplace(p, sq.pairs.size());
    if (inserted) sq.pairs.push_back(p);
    return it->second;
  }

  void add(Sq& sq, std::size_t src, StatePair dst, typename Sq::Label label) {
    std::size_t d = intern(sq, dst);
    sq.transitions.push_back({src, std::move(label), d});
  }

  const Transducer<M>& t_;
  std::vector<std::vector<std::vector<const Tr*>>> by_symbol_;
  std::vector<std::vector<const Tr*>> by_eps_;
};

}  // namespace detail

/// Squared output automaton of a real-time transducer: pairs of transitions
/// that read the same symbol.
template <MgeMonoid M>
SquaredAutomaton<M> squared(const Transducer<M>& t) {
  if (!t.is_real_time()) throw std::invalid_argument("squared: transducer has epsilon transitions");
  return detail::SquaredBuilder<M>(t).build(false);
}

/// Squared output automaton of an arbitrary transducer: symbol pairings plus
/// one-sided epsilon moves labeled (e, m) and (m, e).
template <MgeMonoid M>
SquaredAutomaton<M> squared_eps(const Transducer<M>& t) {
  return detail::SquaredBuilder<M>(t).build(true);
}

/// Pairs from which a final pair is reachable (backward search from F x F).
template <MgeMonoid M>
std::vector<char> coaccessible(const SquaredAutomaton<M>& a) {
  std::vector<std::vector<std::size_t>> preds(a.size());
  for (const auto& tr : a.transitions) preds[tr.dst].push_back(tr.src);
  std::vector<char> c(a.size(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.is_final[k]) {
      c[k] = 1;
      queue.push_back(k);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t p : preds[queue[head]])
      if (!c[p]) {
        c[p] = 1;
        queue.push_back(p);
      }
  return c;
}

/// Per-pair chosen relevant output pair `rho` and its mge `nu`.
template <MgeMonoid M>
struct Valuation {
  std::vector<std::optional<PairOf<M>>> rho;
  std::vector<std::optional<PairOf<M>>> nu;
};

/// Assigns rho on first breadth-first discovery (restricted to co-accessible
/// pairs) and nu = (e, e) on equal components, eta(rho) otherwise.
template <MgeMonoid M>
Valuation<M> valuation(const SquaredAutomaton<M>& a, const std::vector<char>& coacc) {
  const auto& monoid = a.monoid;
  const auto e = monoid.unit();
  Valuation<M> v;
  v.rho.resize(a.size());
  v.nu.resize(a.size());
  for (std::size_t k = 0; k < a.num_initial; ++k)
    if (coacc[k]) v.rho[k] = PairOf<M>{e, e};
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!coacc[k] || !v.rho[k]) continue;
    for (std::size_t i = a.first_transition[k]; i < a.first_transition[k + 1]; ++i) {
      const auto& tr = a.transitions[i];
      if (!coacc[tr.dst] || v.rho[tr.dst]) continue;
      v.rho[tr.dst] = PairOf<M>{monoid.op(v.rho[k]->first, tr.label.first), monoid.op(v.rho[k]->second, tr.label.second)};
    }
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!v.rho[k]) continue;
    const auto& [x1, x2] = *v.rho[k];
    if (x1 == x2)
      v.nu[k] = PairOf<M>{e, e};
    else
      v.nu[k] = monoid.eta(x1, x2);
  }
  return v;
}

/// Golden-file dump: one line per pair, `((p1,p2)) rho=(v,v) nu=(v,v)`.
template <MgeMonoid M>
void dump_valuation(std::ostream& os, const SquaredAutomaton<M>& a, const Valuation<M>& v) {
  auto pair_text = [&](const std::optional<PairOf<M>>& p) -> std::string {
    if (!p) return "-";
    return "(" + a.monoid.format(p->first) + "," + a.monoid.format(p->second) + ")";
  };
  for (std::size_t k = 0; k < a.size(); ++k)
    os << "((" << a.pairs[k].first << "," << a.pairs[k].second << ")) rho=" << pair_text(v.rho[k])
       << " nu=" << pair_text(v.nu[k]) << '\n';
}

}  // namespace bimc

#endif
