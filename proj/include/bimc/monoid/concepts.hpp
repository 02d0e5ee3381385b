#ifndef BIMC_MONOID_CONCEPTS_HPP
#define BIMC_MONOID_CONCEPTS_HPP

#include <concepts>
#include <optional>
#include <string>
#include <utility>

namespace bimc {

/// An effective monoid with most general equalizers.
///
/// Values are compared with `==` (decidable equality) and ordered with `<` so
/// they can live in ordered containers. `eta(a, b)` returns a most general
/// equalizer `(x, y)` with `op(a, x) == op(b, y)` or nothing when the pair is
/// not equalizable; `eta(m, m)` must be `(unit, unit)`. `inverse` returns the
/// two-sided inverse of invertible elements.
template <typename M>
concept MgeMonoid = requires(const M& monoid, const typename M::value_type& a) {
  typename M::value_type;
  { monoid.unit() } -> std::convertible_to<typename M::value_type>;
  { monoid.op(a, a) } -> std::convertible_to<typename M::value_type>;
  { monoid.eta(a, a) } -> std::same_as<std::optional<std::pair<typename M::value_type, typename M::value_type>>>;
  { monoid.inverse(a) } -> std::same_as<std::optional<typename M::value_type>>;
  { monoid.contains(a) } -> std::convertible_to<bool>;
  { monoid.format(a) } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename M::value_type> && std::copyable<M>;

template <MgeMonoid M>
using ValueOf = typename M::value_type;

template <MgeMonoid M>
using PairOf = std::pair<ValueOf<M>, ValueOf<M>>;

}  // namespace bimc

#endif
