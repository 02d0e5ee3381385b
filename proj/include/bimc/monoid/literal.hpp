#ifndef BIMC_MONOID_LITERAL_HPP
#define BIMC_MONOID_LITERAL_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bimc/monoid/descriptor.hpp"

namespace bimc {

class LiteralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class LiteralCursor {
 public:
  explicit LiteralCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool consume(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }
  char raw_next() {
    if (pos_ >= text_.size()) fail("unexpected end of literal");
    return text_[pos_++];
  }
  bool raw_peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool raw_at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw LiteralError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline MonoidDescriptor parse_descriptor(LiteralCursor& cur, int depth) {
  if (depth > 64) cur.fail("descriptor nesting too deep");
  if (cur.consume("free:")) {
    std::string symbols;
    while (!cur.raw_at_end() && !cur.raw_peek(',') && !cur.raw_peek(')')) {
      char c = cur.raw_next();
      if (std::isspace(static_cast<unsigned char>(c))) break;
      symbols += c;
    }
    if (symbols.empty()) cur.fail("free monoid needs a non-empty alphabet");
    try {
      return MonoidDescriptor::free_over(symbols);
    } catch (const std::invalid_argument& e) {
      cur.fail(e.what());
    }
  }
  if (cur.consume("nnrat")) return MonoidDescriptor::nonneg_rational();
  if (cur.consume("intgrp")) return MonoidDescriptor::integer_group();
  if (cur.consume("product")) {
    cur.expect('(');
    auto a = parse_descriptor(cur, depth + 1);
    cur.expect(',');
    auto b = parse_descriptor(cur, depth + 1);
    cur.expect(')');
    return MonoidDescriptor::product(std::move(a), std::move(b));
  }
  cur.fail("unknown monoid descriptor");
}

inline MonoidValue parse_value(const MonoidDescriptor& d, LiteralCursor& cur) {
  switch (d.kind()) {
    case MonoidDescriptor::Kind::free: {
      cur.expect('"');
      std::string text;
      while (!cur.raw_peek('"')) text += cur.raw_next();
      cur.raw_next();
      try {
        return MonoidValue::word(d.free_monoid().word(text));
      } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
      }
    }
    case MonoidDescriptor::Kind::nonneg_rational: {
      if (cur.peek() == '-') cur.fail("negative value in a non-negative monoid");
      if (cur.peek() == '+') cur.raw_next();
      Integer num(std::string(cur.digits()));
      Integer den = 1;
      if (cur.raw_peek('/')) {
        cur.raw_next();
        den = Integer(std::string(cur.digits()));
        if (den == 0) cur.fail("zero denominator");
      }
      return MonoidValue::rational(Rational(num, den));
    }
    case MonoidDescriptor::Kind::integer_group: {
      bool negative = false;
      if (cur.peek() == '-' || cur.peek() == '+') negative = cur.raw_next() == '-';
      Integer v(std::string(cur.digits()));
      return MonoidValue::integer(negative ? Integer(-v) : v);
    }
    case MonoidDescriptor::Kind::product: {
      cur.expect('(');
      auto a = parse_value(d.first(), cur);
      cur.expect(',');
      auto b = parse_value(d.second(), cur);
      cur.expect(')');
      return MonoidValue::pair(std::move(a), std::move(b));
    }
  }
  cur.fail("unreachable");
}

}  // namespace detail

inline MonoidDescriptor parse_descriptor(std::string_view text) {
  detail::LiteralCursor cur(text);
  auto d = detail::parse_descriptor(cur, 0);
  if (!cur.at_end()) cur.fail("trailing characters after descriptor");
  return d;
}

/// Parses a value literal of descriptor `d`: `"word"`, `p/q`, `-5`, `(v1,v2)`.
inline MonoidValue parse_value(const MonoidDescriptor& d, std::string_view text) {
  detail::LiteralCursor cur(text);
  auto v = detail::parse_value(d, cur);
  if (!cur.at_end()) cur.fail("trailing characters after value");
  return v;
}

}  // namespace bimc

#endif
