#include <catch_amalgamated.hpp>

#include <sstream>

#include "bimc/bimc.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace bimc;

namespace {

DescribedTransducer parse(const std::string& text) { return parse_transducer(text); }

MonoidValue w(const DescribedTransducer& t, const char* text) { return MonoidValue::word(t.monoid.free_monoid().word(text)); }

using Reached = std::set<std::pair<StatePair, std::pair<MonoidValue, MonoidValue>>>;

// Pairs of paths of a real-time transducer on u, built from single paths.
Reached pairs_by_product(const DescribedTransducer& t, const Word& u) {
  std::set<std::pair<State, MonoidValue>> cur;
  for (State i : t.initial) cur.insert({i, t.monoid.unit()});
  for (Symbol x : u) {
    std::set<std::pair<State, MonoidValue>> next;
    for (const auto& [q, v] : cur)
      for (const auto& tr : t.transitions)
        if (tr.src == q && tr.input == x) next.insert({tr.dst, t.monoid.op(v, tr.output)});
    cur = std::move(next);
  }
  Reached out;
  for (const auto& [q1, v1] : cur)
    for (const auto& [q2, v2] : cur) out.insert({{q1, q2}, {v1, v2}});
  return out;
}

// The same set read off the squared automaton. Its transitions carry no
// input symbol, so the symbol is recovered from the source transducer.
Reached pairs_by_squared(const DescribedTransducer& t, const SquaredAutomaton<MonoidDescriptor>& a, const Word& u) {
  Reached cur;
  for (std::size_t k = 0; k < a.num_initial; ++k) cur.insert({a.pairs[k], {t.monoid.unit(), t.monoid.unit()}});
  for (Symbol x : u) {
    Reached next;
    for (const auto& [p, v] : cur) {
      auto k = a.find(p);
      REQUIRE(k);
      for (std::size_t i = a.first_transition[*k]; i < a.first_transition[*k + 1]; ++i) {
        const auto& tr = a.transitions[i];
        const auto& q = a.pairs[tr.dst];
        bool reads_x = false;
        for (const auto& t1 : t.transitions)
          for (const auto& t2 : t.transitions)
            if (t1.src == p.first && t2.src == p.second && t1.input == x && t2.input == x && t1.dst == q.first &&
                t2.dst == q.second && t1.output == tr.label.first && t2.output == tr.label.second)
              reads_x = true;
        if (reads_x) next.insert({q, {t.monoid.op(v.first, tr.label.first), t.monoid.op(v.second, tr.label.second)}});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("squared automaton of T_2", "[squared]") {
  auto t = make_tn(2);
  auto a = squared(t);
  REQUIRE(a.num_initial == 1);
  CHECK(a.pairs[0] == StatePair{0, 0});
  std::size_t expected = 0;
  for (Symbol x = 0; x < 2; ++x) {
    std::size_t k = 0;
    for (const auto& tr : t.transitions) k += tr.src == 0 && tr.input == x;
    expected += k * k;
  }
  CHECK(a.first_transition[1] - a.first_transition[0] == expected);
  CHECK(a.size() <= 16);
  CHECK(a.is_final[*a.find({3, 3})]);
}

TEST_CASE("squared automaton basics", "[squared]") {
  auto single = parse(R"(monoid free:a
alphabet x
states 2
initial 0
final 1
t 0 x "a" 1
)");
  auto a = squared(single);
  CHECK(a.size() == 2);
  REQUIRE(a.transitions.size() == 1);
  CHECK(a.transitions[0].label == std::pair{w(single, "a"), w(single, "a")});
  CHECK(a.is_final == std::vector<char>{0, 1});

  DescribedTransducer empty{single.monoid, single.alphabet, 0, {}, {}, {}};
  CHECK(squared(empty).size() == 0);

  auto eps = parse(R"(monoid free:a
alphabet x
states 2
initial 0
final 1
t 0 - "a" 1
)");
  CHECK_THROWS_AS(squared(eps), std::invalid_argument);
  auto b = squared_eps(eps);
  // (0,0) -> (0,1) labeled (e, a) and (0,0) -> (1,0) labeled (a, e), then on to (1,1).
  CHECK(b.size() == 4);
  CHECK(b.pairs[1] == StatePair{0, 1});
  CHECK(b.transitions[0].label == std::pair{w(eps, ""), w(eps, "a")});
  CHECK(b.transitions[1].label == std::pair{w(eps, "a"), w(eps, "")});
  CHECK(b.transitions.size() == 4);
}

TEST_CASE("squared paths are pairs of same-input paths", "[squared][random]") {
  gen::Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    auto t = gen::random_transducer(rng, {});
    auto a = squared(t);
    CHECK(a.size() <= t.num_states * t.num_states);
    for (const auto& u : oracle::all_words(t.alphabet.size(), 3)) REQUIRE(pairs_by_squared(t, a, u) == pairs_by_product(t, u));
  }
}

TEST_CASE("coaccessible pairs", "[squared]") {
  auto t = parse(R"(monoid free:a
alphabet x
states 3
initial 0
final 1
t 0 x "a" 1
t 0 x "" 2
)");
  auto a = squared(t);
  auto c = coaccessible(a);
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool expected = a.pairs[k] == StatePair{0, 0} || a.pairs[k] == StatePair{1, 1};
    CHECK(static_cast<bool>(c[k]) == expected);
  }
}

TEST_CASE("valuation", "[squared]") {
  auto t = parse(R"(monoid free:ab
alphabet x y
states 4
initial 0
final 3
t 0 x "a" 1
t 0 x "ab" 2
t 1 y "b" 3
t 2 y "" 3
t 2 x "" 2
)");
  auto a = squared(t);
  auto c = coaccessible(a);
  auto v = valuation(a, c);
  auto k = *a.find({1, 2});
  CHECK(v.rho[k] == std::pair{w(t, "a"), w(t, "ab")});
  CHECK(v.nu[k] == std::pair{w(t, "b"), w(t, "")});
  auto back = *a.find({2, 1});
  CHECK(v.nu[back] == std::pair{w(t, ""), w(t, "b")});
  CHECK(v.nu[0] == std::pair{w(t, ""), w(t, "")});
  CHECK(v.nu[*a.find({3, 3})] == std::pair{w(t, ""), w(t, "")});
  // (2, 2) is reached from (0, 0) with ("ab", "ab").
  CHECK(v.rho[*a.find({2, 2})] == std::pair{w(t, "ab"), w(t, "ab")});
  CHECK(v.nu[*a.find({2, 2})] == std::pair{w(t, ""), w(t, "")});

  auto clash = parse(R"(monoid free:ab
alphabet x
states 3
initial 0
final 2
t 0 x "a" 1
t 0 x "b" 1
t 1 x "" 2
)");
  auto ca = squared(clash);
  auto cv = valuation(ca, coaccessible(ca));
  // (1,1) is first reached with ("a", "a"); the ("a", "b") path is not its rho.
  CHECK(cv.nu[*ca.find({1, 1})] == std::pair{w(clash, ""), w(clash, "")});

  auto unreachable = parse(R"(monoid free:ab
alphabet x
states 3
initial 0
final 1
t 0 x "a" 1
t 0 x "b" 2
)");
  auto ua = squared(unreachable);
  auto uv = valuation(ua, coaccessible(ua));
  CHECK_FALSE(uv.rho[*ua.find({1, 2})].has_value());
  CHECK_FALSE(uv.nu[*ua.find({1, 2})].has_value());
}

TEST_CASE("dump_valuation", "[squared]") {
  auto t = parse(R"(monoid free:ab
alphabet x
states 3
initial 0
final 2
t 0 x "a" 1
t 0 x "ab" 2
t 1 - "b" 2
)");
  auto a = squared_eps(t);
  auto v = valuation(a, coaccessible(a));
  std::ostringstream os;
  dump_valuation(os, a, v);
  auto text = os.str();
  CHECK(text.rfind("((0,0)) rho=(\"\",\"\") nu=(\"\",\"\")\n", 0) == 0);
  CHECK(text.find("((1,2)) rho=(\"a\",\"ab\") nu=(\"b\",\"\")\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(a.size()));
}
