#ifndef BIMC_TESTS_SUPPORT_RANDOM_HPP
#define BIMC_TESTS_SUPPORT_RANDOM_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bimc/fsa/transducer.hpp"
#include "bimc/monoid/descriptor.hpp"

namespace gen {

using bimc::MonoidDescriptor;
using bimc::MonoidValue;
using bimc::State;
using bimc::Symbol;
using bimc::Transducer;
using bimc::Word;

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t max_len) {
  Word w(uniform(rng, 0, max_len));
  for (auto& s : w) s = static_cast<Symbol>(uniform(rng, 0, alphabet - 1));
  return w;
}

inline bimc::Alphabet letters(std::size_t n) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(i < 3 ? std::string(1, static_cast<char>('x' + i)) : "s" + std::to_string(i));
  return bimc::Alphabet(std::move(tokens));
}

struct Shape {
  std::size_t max_states = 4;
  std::size_t max_symbols = 3;
  std::size_t max_output = 2;
  std::size_t max_transitions = 8;
  bool epsilon = false;
  double epsilon_share = 0.25;
  bool spine = false;  // chain every state into one path from an initial to a final state
};

/// Random transducer with free outputs over {a, b}.
inline Transducer<MonoidDescriptor> random_transducer(Rng& rng, const Shape& shape) {
  auto monoid = MonoidDescriptor::free_over("ab");
  std::size_t n = uniform(rng, 1, shape.max_states);
  std::size_t k = uniform(rng, 1, shape.max_symbols);
  Transducer<MonoidDescriptor> t{monoid, letters(k), n, {}, {}, {}};
  std::size_t inits = uniform(rng, 1, std::min<std::size_t>(2, n));
  for (std::size_t i = 0; i < inits; ++i) t.initial.push_back(static_cast<State>(uniform(rng, 0, n - 1)));
  std::size_t finals = uniform(rng, 1, std::min<std::size_t>(2, n));
  for (std::size_t i = 0; i < finals; ++i) t.final.push_back(static_cast<State>(uniform(rng, 0, n - 1)));
  t.initial = bimc::normalized(t.initial);
  t.final = bimc::normalized(t.final);
  auto add = [&](State src, State dst) {
    Word out(uniform(rng, 0, shape.max_output));
    for (auto& s : out) s = static_cast<Symbol>(uniform(rng, 0, 1));
    Symbol input = shape.epsilon && coin(rng, shape.epsilon_share) ? bimc::kEpsilon
                                                                   : static_cast<Symbol>(uniform(rng, 0, k - 1));
    t.transitions.push_back({src, input, MonoidValue::word(std::move(out)), dst});
  };
  std::size_t m = uniform(rng, 1, shape.max_transitions);
  if (shape.spine) {
    std::vector<State> order(n);
    for (State q = 0; q < n; ++q) order[q] = q;
    std::shuffle(order.begin(), order.end(), rng);
    t.initial = {order.front()};
    t.final = bimc::normalized({order.back(), static_cast<State>(uniform(rng, 0, n - 1))});
    for (std::size_t i = 0; i + 1 < n; ++i) add(order[i], order[i + 1]);
  }
  for (std::size_t i = 0; i < m; ++i) add(static_cast<State>(uniform(rng, 0, n - 1)), static_cast<State>(uniform(rng, 0, n - 1)));
  bimc::remove_duplicate_transitions(t);
  return t;
}

/// Random value of one of the descriptor kinds, small enough that
/// coincidences (equal values, prefixes) are frequent.
inline MonoidValue random_value(Rng& rng, const MonoidDescriptor& d) {
  switch (d.kind()) {
    case MonoidDescriptor::Kind::free: {
      Word w(uniform(rng, 0, 4));
      for (auto& s : w) s = static_cast<Symbol>(uniform(rng, 0, d.free_monoid().alphabet_size() - 1));
      return MonoidValue::word(std::move(w));
    }
    case MonoidDescriptor::Kind::nonneg_rational:
      return MonoidValue::rational(bimc::Rational(static_cast<long>(uniform(rng, 0, 12)), static_cast<long>(uniform(rng, 1, 4))));
    case MonoidDescriptor::Kind::integer_group:
      return MonoidValue::integer(bimc::Integer(static_cast<long>(uniform(rng, 0, 20)) - 10));
    case MonoidDescriptor::Kind::product:
      return MonoidValue::pair(random_value(rng, d.first()), random_value(rng, d.second()));
  }
  return {};
}

}  // namespace gen

#endif
