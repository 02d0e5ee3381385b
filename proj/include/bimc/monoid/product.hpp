#ifndef BIMC_MONOID_PRODUCT_HPP
#define BIMC_MONOID_PRODUCT_HPP

#include <optional>
#include <string>
#include <utility>

#include "bimc/monoid/concepts.hpp"

namespace bimc {

/// Cartesian product of two mge monoids; every operation works componentwise.
template <MgeMonoid First, MgeMonoid Second>
class Product {
 public:
  using value_type = std::pair<ValueOf<First>, ValueOf<Second>>;

  Product() = default;
  Product(First first, Second second) : first_(std::move(first)), second_(std::move(second)) {}

  const First& first() const { return first_; }
  const Second& second() const { return second_; }

  value_type unit() const { return {first_.unit(), second_.unit()}; }

  value_type op(const value_type& a, const value_type& b) const {
    return {first_.op(a.first, b.first), second_.op(a.second, b.second)};
  }

  std::optional<std::pair<value_type, value_type>> eta(const value_type& a, const value_type& b) const {
    if (a == b) return std::pair{unit(), unit()};
    auto x = first_.eta(a.first, b.first);
    if (!x) return std::nullopt;
    auto y = second_.eta(a.second, b.second);
    if (!y) return std::nullopt;
    return std::pair{value_type{std::move(x->first), std::move(y->first)},
                     value_type{std::move(x->second), std::move(y->second)}};
  }

  std::optional<value_type> inverse(const value_type& a) const {
    auto x = first_.inverse(a.first);
    if (!x) return std::nullopt;
    auto y = second_.inverse(a.second);
    if (!y) return std::nullopt;
    return value_type{std::move(*x), std::move(*y)};
  }

  bool contains(const value_type& a) const { return first_.contains(a.first) && second_.contains(a.second); }

  std::string format(const value_type& a) const {
    return "(" + first_.format(a.first) + "," + second_.format(a.second) + ")";
  }

  friend bool operator==(const Product&, const Product&) = default;

 private:
  First first_;
  Second second_;
};

}  // namespace bimc

#endif
