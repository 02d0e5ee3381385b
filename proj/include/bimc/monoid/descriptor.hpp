#ifndef BIMC_MONOID_DESCRIPTOR_HPP
#define BIMC_MONOID_DESCRIPTOR_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "bimc/core/types.hpp"
#include "bimc/monoid/free_monoid.hpp"
#include "bimc/monoid/numeric.hpp"

namespace bimc {

class MonoidValue;

/// Element of one of the supported mge monoids, tagged with its kind.
///
/// Pair payloads are shared and immutable, so copies are cheap.
class MonoidValue {
 public:
  using Pair = std::pair<MonoidValue, MonoidValue>;

  MonoidValue() : data_(Word{}) {}
  static MonoidValue word(Word w) { return MonoidValue(Data(std::move(w))); }
  static MonoidValue rational(Rational r) { return MonoidValue(Data(std::move(r))); }
  static MonoidValue integer(Integer i) { return MonoidValue(Data(std::move(i))); }
  static MonoidValue pair(MonoidValue a, MonoidValue b) {
    return MonoidValue(Data(std::make_shared<const Pair>(std::move(a), std::move(b))));
  }

  bool is_word() const { return data_.index() == 0; }
  bool is_rational() const { return data_.index() == 1; }
  bool is_integer() const { return data_.index() == 2; }
  bool is_pair() const { return data_.index() == 3; }

  const Word& as_word() const { return get<Word>("free-word"); }
  const Rational& as_rational() const { return get<Rational>("nonneg-rational"); }
  const Integer& as_integer() const { return get<Integer>("integer"); }
  const MonoidValue& first() const { return get<std::shared_ptr<const Pair>>("pair")->first; }
  const MonoidValue& second() const { return get<std::shared_ptr<const Pair>>("pair")->second; }

  friend bool operator==(const MonoidValue& a, const MonoidValue& b) {
    return std::is_eq(a <=> b);
  }

  friend std::strong_ordering operator<=>(const MonoidValue& a, const MonoidValue& b) {
    if (a.data_.index() != b.data_.index()) return a.data_.index() <=> b.data_.index();
    switch (a.data_.index()) {
      case 0: return a.as_word() <=> b.as_word();
      case 1: return three_way(a.as_rational(), b.as_rational());
      case 2: return three_way(a.as_integer(), b.as_integer());
      default: {
        if (auto c = a.first() <=> b.first(); c != 0) return c;
        return a.second() <=> b.second();
      }
    }
  }

 private:
  using Data = std::variant<Word, Rational, Integer, std::shared_ptr<const Pair>>;

  explicit MonoidValue(Data d) : data_(std::move(d)) {}

  template <typename T>
  static std::strong_ordering three_way(const T& a, const T& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  template <typename T>
  const T& get(const char* kind) const {
    if (auto* p = std::get_if<T>(&data_)) return *p;
    throw DescriptorMismatch(std::string("expected a ") + kind + " value");
  }

  Data data_;
};

/// Runtime description of an output monoid; also provides its operations.
///
/// Literal syntax: `free:<symbols>`, `nnrat`, `intgrp`, `product(<d1>,<d2>)`.
class MonoidDescriptor {
 public:
  enum class Kind { free, nonneg_rational, integer_group, product };
  using value_type = MonoidValue;

  MonoidDescriptor() : MonoidDescriptor(free_over("a")) {}

  static MonoidDescriptor free_over(std::string symbols) {
    MonoidDescriptor d(Kind::free);
    d.free_ = FreeMonoid(std::move(symbols));
    return d;
  }
  static MonoidDescriptor nonneg_rational() { return MonoidDescriptor(Kind::nonneg_rational); }
  static MonoidDescriptor integer_group() { return MonoidDescriptor(Kind::integer_group); }
  static MonoidDescriptor product(MonoidDescriptor a, MonoidDescriptor b) {
    MonoidDescriptor d(Kind::product);
    d.parts_ = std::make_shared<const std::pair<MonoidDescriptor, MonoidDescriptor>>(std::move(a), std::move(b));
    return d;
  }

  Kind kind() const { return kind_; }
  const FreeMonoid& free_monoid() const {
    if (kind_ != Kind::free) throw DescriptorMismatch("descriptor is not a free monoid");
    return free_;
  }
  const MonoidDescriptor& first() const { return require_product().first; }
  const MonoidDescriptor& second() const { return require_product().second; }

  std::string literal() const {
    switch (kind_) {
      case Kind::free: return "free:" + free_.symbols();
      case Kind::nonneg_rational: return "nnrat";
      case Kind::integer_group: return "intgrp";
      case Kind::product: return "product(" + first().literal() + "," + second().literal() + ")";
    }
    return {};
  }

  value_type unit() const {
    switch (kind_) {
      case Kind::free: return MonoidValue::word({});
      case Kind::nonneg_rational: return MonoidValue::rational(0);
      case Kind::integer_group: return MonoidValue::integer(0);
      case Kind::product: return MonoidValue::pair(first().unit(), second().unit());
    }
    return {};
  }

  value_type op(const value_type& a, const value_type& b) const {
    switch (kind_) {
      case Kind::free: return MonoidValue::word(free_.op(a.as_word(), b.as_word()));
      case Kind::nonneg_rational:
        if (a.as_rational() < 0 || b.as_rational() < 0) throw DescriptorMismatch("negative value in nnrat");
        return MonoidValue::rational(rationals_.op(a.as_rational(), b.as_rational()));
      case Kind::integer_group: return MonoidValue::integer(integers_.op(a.as_integer(), b.as_integer()));
      case Kind::product:
        return MonoidValue::pair(first().op(a.first(), b.first()), second().op(a.second(), b.second()));
    }
    return {};
  }

  std::optional<std::pair<value_type, value_type>> eta(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    if (a == b) return std::pair{unit(), unit()};
    switch (kind_) {
      case Kind::free: return wrap(free_.eta(a.as_word(), b.as_word()), &MonoidValue::word);
      case Kind::nonneg_rational:
        return wrap(rationals_.eta(a.as_rational(), b.as_rational()), &MonoidValue::rational);
      case Kind::integer_group: return wrap(integers_.eta(a.as_integer(), b.as_integer()), &MonoidValue::integer);
      case Kind::product: {
        auto x = first().eta(a.first(), b.first());
        if (!x) return std::nullopt;
        auto y = second().eta(a.second(), b.second());
        if (!y) return std::nullopt;
        return std::pair{MonoidValue::pair(std::move(x->first), std::move(y->first)),
                         MonoidValue::pair(std::move(x->second), std::move(y->second))};
      }
    }
    return std::nullopt;
  }

  std::optional<value_type> inverse(const value_type& a) const {
    switch (kind_) {
      case Kind::free: return wrap(free_.inverse(a.as_word()), &MonoidValue::word);
      case Kind::nonneg_rational: return wrap(rationals_.inverse(a.as_rational()), &MonoidValue::rational);
      case Kind::integer_group: return wrap(integers_.inverse(a.as_integer()), &MonoidValue::integer);
      case Kind::product: {
        auto x = first().inverse(a.first());
        if (!x) return std::nullopt;
        auto y = second().inverse(a.second());
        if (!y) return std::nullopt;
        return MonoidValue::pair(std::move(*x), std::move(*y));
      }
    }
    return std::nullopt;
  }

  /// True iff `a` has this descriptor's shape and satisfies its payload invariants.
  bool contains(const value_type& a) const {
    switch (kind_) {
      case Kind::free: return a.is_word() && free_.contains(a.as_word());
      case Kind::nonneg_rational: return a.is_rational() && rationals_.contains(a.as_rational());
      case Kind::integer_group: return a.is_integer();
      case Kind::product: return a.is_pair() && first().contains(a.first()) && second().contains(a.second());
    }
    return false;
  }

  std::string format(const value_type& a) const {
    switch (kind_) {
      case Kind::free: return free_.format(a.as_word());
      case Kind::nonneg_rational: return rationals_.format(a.as_rational());
      case Kind::integer_group: return integers_.format(a.as_integer());
      case Kind::product: return "(" + first().format(a.first()) + "," + second().format(a.second()) + ")";
    }
    return {};
  }

  friend bool operator==(const MonoidDescriptor& a, const MonoidDescriptor& b) {
    return a.literal() == b.literal();
  }

 private:
  explicit MonoidDescriptor(Kind k) : kind_(k) {}

  const std::pair<MonoidDescriptor, MonoidDescriptor>& require_product() const {
    if (kind_ != Kind::product) throw DescriptorMismatch("descriptor is not a product");
    return *parts_;
  }

  void check(const value_type& a) const {
    if (!contains(a)) throw DescriptorMismatch("value " + describe_shape(a) + " does not belong to " + literal());
  }

  static std::string describe_shape(const value_type& a) {
    if (a.is_word()) return "<free-word>";
    if (a.is_rational()) return "<rational>";
    if (a.is_integer()) return "<integer>";
    return "(" + describe_shape(a.first()) + "," + describe_shape(a.second()) + ")";
  }

  template <typename T, typename Make>
  static std::optional<std::pair<value_type, value_type>> wrap(std::optional<std::pair<T, T>> p, Make make) {
    if (!p) return std::nullopt;
    return std::pair{make(std::move(p->first)), make(std::move(p->second))};
  }

  template <typename T, typename Make>
  static std::optional<value_type> wrap(std::optional<T> v, Make make) {
    if (!v) return std::nullopt;
    return make(std::move(*v));
  }

  Kind kind_;
  FreeMonoid free_;
  NonNegRational rationals_;
  IntegerGroup integers_;
  std::shared_ptr<const std::pair<MonoidDescriptor, MonoidDescriptor>> parts_;
};

}  // namespace bimc

#endif
