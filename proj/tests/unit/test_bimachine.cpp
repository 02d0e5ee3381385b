#include <catch_amalgamated.hpp>

#include "bimc/bimc.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace bimc;

namespace {

Dfa table_dfa(std::size_t symbols, std::size_t states, std::vector<DfaState> table) {
  return Dfa{symbols, states, 0, std::move(table), {}};
}

// Upper-cases every a that is followed, somewhere later, by a b.
Bimachine<MonoidDescriptor> shout_before_b() {
  auto d = MonoidDescriptor::free_over("aAb");
  Bimachine<MonoidDescriptor> b{d, Alphabet({"a", "b"}), table_dfa(2, 1, {0, 0}), table_dfa(2, 2, {0, 1, 1, 1}), {}, std::nullopt};
  const auto& f = d.free_monoid();
  b.psi[{0, 0, 0}] = MonoidValue::word(f.word("a"));
  b.psi[{0, 0, 1}] = MonoidValue::word(f.word("A"));
  b.psi[{0, 1, 0}] = MonoidValue::word(f.word("b"));
  b.psi[{0, 1, 1}] = MonoidValue::word(f.word("b"));
  return b;
}

std::string shout_oracle(const Word& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 1) {
      out += 'b';
      continue;
    }
    bool later_b = std::find(u.begin() + i + 1, u.end(), Symbol{1}) != u.end();
    out += later_b ? 'A' : 'a';
  }
  return out;
}

}  // namespace

TEST_CASE("hand-built bimachine", "[bimachine]") {
  auto b = shout_before_b();
  for (const auto& u : oracle::all_words(2, 7)) {
    if (u.empty()) {
      CHECK_FALSE(b.evaluate(u).has_value());
      continue;
    }
    auto got = b.evaluate(u);
    REQUIRE(got);
    CHECK(b.monoid.format(*got) == "\"" + shout_oracle(u) + "\"");
    CHECK(b.psi_star(b.left.start, u, b.right.start) == got);
  }
  CHECK_THROWS_AS(b.evaluate({0, 2}), std::out_of_range);
  CHECK(b.psi_at(0, 0, 1) == MonoidValue::word(b.monoid.free_monoid().word("A")));

  b.epsilon_output = b.monoid.unit();
  CHECK(b.evaluate({}) == b.monoid.unit());
  CHECK(b.domain_contains({}));
}

TEST_CASE("partial psi and partial DFAs", "[bimachine]") {
  auto b = shout_before_b();
  b.psi.erase({0, 1, 1});
  CHECK_FALSE(b.evaluate({1, 1}).has_value());
  CHECK(b.evaluate({1}).has_value());
  CHECK_FALSE(b.domain_contains({1, 0, 1}));

  // A left DFA that dies after one symbol still evaluates one-letter words:
  // the left state is not advanced past the last symbol.
  auto c = shout_before_b();
  c.left = table_dfa(2, 1, {kNoState, kNoState});
  CHECK(c.evaluate({0}).has_value());
  CHECK_FALSE(c.evaluate({0, 0}).has_value());
}

TEST_CASE("bimachine over the non-negative rationals", "[bimachine]") {
  // Charges 1/2 per symbol, 3 for the last one.
  auto d = MonoidDescriptor::nonneg_rational();
  Bimachine<MonoidDescriptor> b{d, Alphabet({"x"}), table_dfa(1, 1, {0}), table_dfa(1, 2, {1, 1}), {}, std::nullopt};
  b.psi[{0, 0, 0}] = MonoidValue::rational(Rational(3));
  b.psi[{0, 0, 1}] = MonoidValue::rational(Rational(1, 2));
  for (std::size_t n = 1; n < 8; ++n) CHECK(b.evaluate(Word(n, 0)) == MonoidValue::rational(Rational(3) + Rational(n - 1, 2)));
}

TEST_CASE("two-pass evaluation equals the recursive definition", "[bimachine][random]") {
  gen::Rng rng(12);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    gen::Shape shape;
    shape.epsilon = k % 2 == 1;
    shape.spine = k % 4 < 2;
    auto t = gen::random_transducer(rng, shape);
    auto v = test_functionality(t);
    if (!v.functional) continue;
    auto b = compile(v);
    for (int j = 0; j < 20; ++j) {
      Word u = gen::random_word(rng, t.alphabet.size(), 6);
      if (u.empty()) continue;
      CHECK(b.evaluate(u) == b.psi_star(b.left.start, u, b.right.start));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}
