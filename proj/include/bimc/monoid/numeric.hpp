#ifndef BIMC_MONOID_NUMERIC_HPP
#define BIMC_MONOID_NUMERIC_HPP

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace bimc {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline std::string format_integer(const Integer& v) { return v.str(); }

inline std::string format_rational(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Additive monoid of non-negative rationals (exact).
///
/// Stands in for the non-negative reals and for the additive part of the
/// tropical semiring restricted to finitely many rational weights.
class NonNegRational {
 public:
  using value_type = Rational;

  value_type unit() const { return 0; }
  value_type op(const value_type& a, const value_type& b) const { return a + b; }

  std::optional<std::pair<value_type, value_type>> eta(const value_type& a, const value_type& b) const {
    if (a == b) return std::pair<value_type, value_type>{0, 0};
    const value_type top = a < b ? b : a;
    return std::pair<value_type, value_type>{top - a, top - b};
  }

  std::optional<value_type> inverse(const value_type& a) const {
    if (a == 0) return value_type{0};
    return std::nullopt;
  }

  bool contains(const value_type& a) const { return a >= 0; }
  std::string format(const value_type& a) const { return format_rational(a); }

  friend bool operator==(const NonNegRational&, const NonNegRational&) { return true; }
};

/// The additive group of integers.
class IntegerGroup {
 public:
  using value_type = Integer;

  value_type unit() const { return 0; }
  value_type op(const value_type& a, const value_type& b) const { return a + b; }

  /// Fixed choice among the many mges of a group pair: (e, h^-1 g).
  std::optional<std::pair<value_type, value_type>> eta(const value_type& g, const value_type& h) const {
    return std::pair<value_type, value_type>{0, g - h};
  }

  std::optional<value_type> inverse(const value_type& a) const { return value_type{-a}; }

  bool contains(const value_type&) const { return true; }
  std::string format(const value_type& a) const { return format_integer(a); }

  friend bool operator==(const IntegerGroup&, const IntegerGroup&) { return true; }
};

}  // namespace bimc

#endif
