// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bimc/bimc.hpp"
#include "support/algebra.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace bimc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
};

// Shared between criteria 1, 3 and 7, 8.
struct Ledger {
  std::size_t compiles = 0;
  std::size_t wd_checks = 0;
  std::size_t wd_violations = 0;
  std::size_t dfas = 0;
  std::size_t dfa_violations = 0;

  void record(const CompileStats& s) {
    ++compiles;
    wd_checks += s.well_defined_checks;
    wd_violations += s.well_defined_violations;
  }

  void dfa(std::size_t states, std::size_t source_states) {
    ++dfas;
    if (source_states < 63 && states > (std::size_t{1} << source_states)) ++dfa_violations;
  }
};

Ledger ledger;

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome tn_equalizer() {
  Outcome o;
  for (std::size_t n = 1; n <= 7; ++n) {
    CompileStats s;
    auto t = make_tn(n);
    auto b = compile(t, {}, &s);
    ledger.record(s);
    ledger.dfa(b.left.num_states, t.num_states);
    ledger.dfa(b.right.num_states, t.num_states);
    std::size_t want_right = (std::size_t{1} << n) + n;
    if (b.left.num_states != 3 || b.right.num_states != want_right)
      o.fail("n=" + std::to_string(n) + " left " + std::to_string(b.left.num_states) + " right " + std::to_string(b.right.num_states));
    o.note << n << ":" << b.left.num_states << "+" << b.right.num_states << " ";
  }
  return o;
}

Outcome tn_classical() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    CompileStats s;
    auto b = classical_compile(make_tn(n), {}, &s);
    ledger.dfa(b.left.num_states, s.intermediate_states);
    ledger.dfa(b.right.num_states, s.intermediate_states);
    std::size_t t_min = (2 * n + 3) << (n - 2), left_min = factorial(n) + 2, right_min = (std::size_t{1} << n) + n;
    if (s.intermediate_states < t_min || s.left_states < left_min || s.right_states < right_min)
      o.fail("n=" + std::to_string(n));
    o.note << n << ":T'=" << s.intermediate_states << ">=" << t_min << ",L=" << s.left_states << ">=" << left_min
           << ",R=" << s.right_states << ">=" << right_min << " ";
  }
  return o;
}

Outcome compiler_oracle() {
  Outcome o;
  gen::Rng rng(20240601);
  std::size_t with_eps = 0, without = 0, words = 0, draws = 0;
  while (with_eps + without < 200) {
    ++draws;
    bool want_eps = with_eps < 100 && (without >= 100 || draws % 2 == 0);
    gen::Shape shape;
    shape.epsilon = want_eps;
    shape.spine = gen::coin(rng);
    auto t = gen::random_transducer(rng, shape);
    if (want_eps == t.is_real_time()) continue;
    auto v = test_functionality(t);
    if (!v.functional) continue;
    (want_eps ? with_eps : without)++;
    CompileStats s;
    auto b = compile(v, {}, &s);
    ledger.record(s);
    ledger.dfa(b.left.num_states, t.num_states);
    ledger.dfa(b.right.num_states, t.num_states);
    for (const auto& u : oracle::all_words(t.alphabet.size(), 5)) {
      ++words;
      auto expected = oracle::path_outputs(t, u);
      auto got = b.evaluate(u);
      if (expected.size() > 1) o.fail("oracle sees two outputs on a transducer judged functional");
      else if (got.has_value() != !expected.empty()) o.fail("domain mismatch");
      else if (got && !(*got == *expected.begin())) o.fail("output mismatch");
    }
  }
  o.note << "transducers " << with_eps + without << " (" << with_eps << " with epsilon), words " << words;
  return o;
}

// A functional verdict must never meet a conflict within the bound. A
// nonfunctional verdict without a short conflict is confirmed by searching
// longer words.
Outcome functionality_oracle() {
  Outcome o;
  gen::Rng rng(777);
  std::size_t functional = 0, deep = 0;
  for (int k = 0; k < 500; ++k) {
    gen::Shape shape;
    shape.epsilon = k % 3 == 0;
    shape.spine = k % 2 == 0;
    auto t = gen::random_transducer(rng, shape);
    bool verdict = test_functionality(t).functional;
    bool conflict = oracle::find_conflict(t, 6).has_value();
    functional += verdict;
    if (verdict && conflict) o.fail("case " + std::to_string(k) + " judged functional with a conflict");
    if (!verdict && !conflict) {
      ++deep;
      if (!oracle::find_conflict(t, 10)) o.fail("case " + std::to_string(k) + " judged nonfunctional, no conflict up to length 10");
    }
  }
  o.note << "500 transducers, " << functional << " functional, " << deep << " conflicts only beyond length 6";
  return o;
}

Outcome mge_algebra() {
  Outcome o;
  std::uint64_t seed = 1000;
  for (const auto& d : algebra::standard_instances()) {
    auto r = algebra::check_mge_laws(d, 10000, seed++);
    if (r.failures) o.fail(d.literal() + ": " + (r.messages.empty() ? "" : r.messages.front()));
    o.note << d.literal() << " " << r.cases << "/" << r.failures << " ";
  }
  return o;
}

Outcome squared_bound() {
  Outcome o;
  gen::Rng rng(4242);
  std::size_t done = 0, max_ratio_num = 0, max_ratio_den = 1;
  while (done < 100) {
    gen::Shape shape;
    shape.epsilon = true;
    shape.epsilon_share = 0.35;
    auto t = gen::random_transducer(rng, shape);
    if (t.is_real_time()) continue;
    ++done;
    auto a = squared_eps(t);
    std::size_t bound = 0, eps = 0;
    for (Symbol s = 0; s < t.alphabet.size(); ++s) {
      std::size_t k = 0;
      for (const auto& tr : t.transitions) k += tr.input == s;
      bound += k * k;
    }
    for (const auto& tr : t.transitions) eps += tr.is_epsilon();
    bound += 2 * t.num_states * eps;
    if (a.transitions.size() > bound) o.fail(std::to_string(a.transitions.size()) + " > " + std::to_string(bound));
    if (a.transitions.size() * max_ratio_den > max_ratio_num * bound) {
      max_ratio_num = a.transitions.size();
      max_ratio_den = bound;
    }
  }
  o.note << "100 epsilon transducers, tightest " << max_ratio_num << "/" << max_ratio_den;
  return o;
}

Outcome well_defined() {
  Outcome o;
  if (ledger.wd_violations) o.fail(std::to_string(ledger.wd_violations) + " violations");
  if (ledger.compiles == 0 || ledger.wd_checks == 0) o.fail("no checks recorded");
  o.note << ledger.compiles << " compiles, " << ledger.wd_checks << " transition checks, " << ledger.wd_violations << " violations";
  return o;
}

Outcome size_bound() {
  Outcome o;
  if (ledger.dfa_violations) o.fail(std::to_string(ledger.dfa_violations) + " DFAs above 2^|Q|");
  if (ledger.dfas == 0) o.fail("no DFAs recorded");
  o.note << ledger.dfas << " DFAs checked";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"T_n state counts, equalizer construction (n=1..7)", tn_equalizer},
      {"T_n state counts, classical construction (n=2..6)", tn_classical},
      {"compiled bimachines agree with the path oracle", compiler_oracle},
      {"functionality verdict agrees with the bounded oracle", functionality_oracle},
      {"mge algebra property suite", mge_algebra},
      {"squared automaton transition bound", squared_bound},
      {"psi is well defined", well_defined},
      {"power-set size bound", size_bound},
  };
  bool all = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %d %s [%.1fs] %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.note.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
