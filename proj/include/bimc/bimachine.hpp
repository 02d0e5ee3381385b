#ifndef BIMC_BIMACHINE_HPP
#define BIMC_BIMACHINE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "bimc/core/types.hpp"
#include "bimc/fsa/dfa.hpp"
#include "bimc/monoid/concepts.hpp"

namespace bimc {

struct PsiKey {
  DfaState left;
  Symbol symbol;
  DfaState right;
  friend bool operator==(const PsiKey&, const PsiKey&) = default;
  friend auto operator<=>(const PsiKey&, const PsiKey&) = default;
};

struct PsiKeyHash {
  std::size_t operator()(const PsiKey& k) const {
    std::size_t seed = 0;
    boost::hash_combine(seed, k.left);
    boost::hash_combine(seed, k.symbol);
    boost::hash_combine(seed, k.right);
    return seed;
  }
};

/// Left DFA, right DFA and a partial output function on
/// (left state, symbol, right state).
template <MgeMonoid M>
struct Bimachine {
  using value_type = ValueOf<M>;

  M monoid;
  Alphabet alphabet;
  Dfa left;
  Dfa right;
  std::unordered_map<PsiKey, value_type, PsiKeyHash> psi;
  std::optional<value_type> epsilon_output;  // present iff the empty input is in the domain

  std::optional<value_type> psi_at(DfaState l, Symbol a, DfaState r) const {
    auto it = psi.find({l, a, r});
    if (it == psi.end()) return std::nullopt;
    return it->second;
  }

  /// Two passes: right states over the reversed word, then left states
  /// forward while composing the psi values. Throws std::out_of_range on a
  /// symbol outside the alphabet.
  std::optional<value_type> evaluate(const Word& u) const {
    for (Symbol a : u)
      if (a >= alphabet.size()) throw std::out_of_range("symbol " + std::to_string(a) + " outside the input alphabet");
    if (u.empty()) return epsilon_output;
    std::vector<DfaState> r(u.size() + 1);
    r[u.size()] = right.start;
    for (std::size_t i = u.size(); i-- > 0;) {
      auto n = right.next(r[i + 1], u[i]);
      if (!n) return std::nullopt;
      r[i] = *n;
    }
    DfaState l = left.start;
    value_type out = monoid.unit();
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto c = psi_at(l, u[i], r[i + 1]);
      if (!c) return std::nullopt;
      out = monoid.op(out, *c);
      if (i + 1 == u.size()) break;
      auto n = left.next(l, u[i]);
      if (!n) return std::nullopt;
      l = *n;
    }
    return out;
  }

  bool domain_contains(const Word& u) const { return evaluate(u).has_value(); }

  /// Generalized output function by its recursive definition:
  /// psi*(l, e, r) = e, psi*(l, t s, r) = psi*(l, t, delta_R(r, s)) psi(delta_L*(l, t), s, r).
  std::optional<value_type> psi_star(DfaState l, const Word& u, DfaState r) const {
    if (u.empty()) return monoid.unit();
    Word t(u.begin(), u.end() - 1);
    Symbol s = u.back();
    auto r_prev = right.next(r, s);
    if (!r_prev) return std::nullopt;
    auto head = psi_star(l, t, *r_prev);
    if (!head) return std::nullopt;
    std::optional<DfaState> l_t = l;
    for (Symbol x : t) {
      l_t = left.next(*l_t, x);
      if (!l_t) return std::nullopt;
    }
    if (!l_t) return std::nullopt;
    auto last = psi_at(*l_t, s, r);
    if (!last) return std::nullopt;
    return monoid.op(*head, *last);
  }
};

}  // namespace bimc

#endif
