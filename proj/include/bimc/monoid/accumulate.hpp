#ifndef BIMC_MONOID_ACCUMULATE_HPP
#define BIMC_MONOID_ACCUMULATE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bimc/monoid/concepts.hpp"

namespace bimc {

/// The unique `c` with `op(m, c) == n`, if it exists.
template <MgeMonoid M>
std::optional<ValueOf<M>> solve_right(const M& monoid, const ValueOf<M>& m, const ValueOf<M>& n) {
  auto mge = monoid.eta(m, n);
  if (!mge) return std::nullopt;
  auto inv = monoid.inverse(mge->second);
  if (!inv) return std::nullopt;
  return monoid.op(mge->first, *inv);
}

template <MgeMonoid M>
bool is_equalizer(const M& monoid, std::span<const ValueOf<M>> ms, std::span<const ValueOf<M>> xs) {
  if (ms.size() != xs.size()) return false;
  if (ms.empty()) return true;
  const auto target = monoid.op(ms[0], xs[0]);
  for (std::size_t i = 1; i < ms.size(); ++i)
    if (!(monoid.op(ms[i], xs[i]) == target)) return false;
  return true;
}

/// True iff `xs` is an instance of `general`, i.e. `xs[i] == general[i] * c` for one common `c`.
template <MgeMonoid M>
bool is_instance(const M& monoid, std::span<const ValueOf<M>> xs, std::span<const ValueOf<M>> general) {
  if (xs.size() != general.size()) return false;
  if (xs.empty()) return true;
  auto c = solve_right(monoid, general[0], xs[0]);
  if (!c) return false;
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(monoid.op(general[i], *c) == xs[i])) return false;
  return true;
}

/// Most general equalizer of a whole tuple, built from pairwise mges.
///
/// mu(m) = (e); mu(m1, m2) = eta(m1, m2); the tuple (m1..mn, m_{n+1}) extends
/// mu(m1..mn) = (x1..xn) with (y_n, y_{n+1}) = eta(m_n, m_{n+1}) joined through
/// (zx, zy) = eta(x_n, y_n): result (x1 zx, .., xn zx, y_{n+1} zy).
template <MgeMonoid M>
std::optional<std::vector<ValueOf<M>>> mu_n(const M& monoid, std::span<const ValueOf<M>> ms) {
  if (ms.empty()) throw std::invalid_argument("mu_n needs a non-empty tuple");
  std::vector<ValueOf<M>> acc{monoid.unit()};
  for (std::size_t k = 1; k < ms.size(); ++k) {
    auto step = monoid.eta(ms[k - 1], ms[k]);
    if (!step) return std::nullopt;
    if (k == 1) {
      acc = {std::move(step->first), std::move(step->second)};
      continue;
    }
    auto join = monoid.eta(acc.back(), step->first);
    if (!join) return std::nullopt;
    for (auto& x : acc) x = monoid.op(x, join->first);
    acc.push_back(monoid.op(step->second, join->second));
  }
  return acc;
}

/// Equalizer accumulation over a chain of pairwise mges.
///
/// `chain[i]` is an mge of (m_{i+1}, m_{i+2}); only the first `n - 1` entries
/// are used. Returns n values, or nothing when an intermediate pair is not
/// equalizable.
template <MgeMonoid M>
std::optional<std::vector<ValueOf<M>>> gamma_n(const M& monoid, std::size_t n, std::span<const PairOf<M>> chain) {
  if (n == 0) throw std::invalid_argument("gamma_n needs n >= 1");
  if (chain.size() + 1 < n) throw std::invalid_argument("gamma_n: chain shorter than n - 1");
  std::vector<ValueOf<M>> acc{monoid.unit()};
  if (n == 1) return acc;
  acc = {chain[0].first, chain[0].second};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    auto join = monoid.eta(acc.back(), chain[k].first);
    if (!join) return std::nullopt;
    for (auto& x : acc) x = monoid.op(x, join->first);
    acc.push_back(monoid.op(chain[k].second, join->second));
  }
  return acc;
}

template <MgeMonoid M>
std::optional<std::vector<ValueOf<M>>> gamma_n(const M& monoid, std::span<const PairOf<M>> chain) {
  return gamma_n(monoid, chain.size() + 1, chain);
}

}  // namespace bimc

#endif
