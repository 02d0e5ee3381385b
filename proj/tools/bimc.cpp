// bimc: functionality checks and bimachine compilation for monoidal transducers.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "bimc/bimc.hpp"

namespace {

using namespace bimc;

enum Exit : int {
  ok = 0,
  rejected = 1,
  undefined = 2,
  usage = 64,
  data = 65,
  software = 70,
  io = 74,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_states_from_env() {
  const char* raw = std::getenv("BIMC_MAX_STATES");
  if (!raw || !*raw) return kNoLimit;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("BIMC_MAX_STATES must be a positive integer, got '") + raw + "'");
  }
}

DescribedTransducer load(const std::string& path) {
  std::vector<std::string> warnings;
  auto t = read_transducer(path, &warnings);
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << '\n';
  return t;
}

void print_stats(std::ostream& os, const CompileStats& s, bool classical) {
  os << "left_states " << s.left_states << '\n' << "right_states " << s.right_states << '\n';
  if (classical) os << "intermediate_states " << s.intermediate_states << '\n';
  os << "psi_entries " << s.psi_entries << '\n';
  if (!classical) os << "well_defined_checks " << s.well_defined_checks << '\n' << "well_defined_violations " << s.well_defined_violations << '\n';
  os << "build_ms " << s.build_ms << '\n';
}

int cmd_check(const std::string& file) {
  auto t = load(file);
  auto v = test_functionality(t);
  if (v.functional) {
    std::cout << "functional\n";
    return ok;
  }
  std::cout << "not functional: " << v.witness->describe() << '\n';
  return rejected;
}

int cmd_compile(const std::string& file, const std::string& out, const std::string& method, bool stats) {
  auto t = load(file);
  CompileOptions opts;
  opts.max_states = max_states_from_env();
  CompileStats s;
  DescribedBimachine b = method == "classical" ? classical_compile(t, opts, &s) : compile(t, opts, &s);
  detail::write_file(out, serialize_bimachine(b));
  if (stats) print_stats(std::cout, s, method == "classical");
  return ok;
}

int cmd_run(const std::string& file, const std::string& input) {
  auto b = read_bimachine(file);
  Word u;
  try {
    u = tokenize_word(b.alphabet, input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bimc: " << e.what() << '\n';
    return data;
  }
  auto v = b.evaluate(u);
  if (!v) {
    std::cout << "UNDEFINED\n";
    return undefined;
  }
  std::cout << b.monoid.format(*v) << '\n';
  return ok;
}

int cmd_bench(std::size_t max_n, const std::string& method, const std::string& format, BenchLimits limits) {
  std::set<BenchMethod> methods;
  if (method != "classical") methods.insert(BenchMethod::mge);
  if (method != "mge") methods.insert(BenchMethod::classical);
  limits.max_states = max_states_from_env();
  auto report = run_bench(max_n, methods, limits);
  if (format == "csv")
    write_csv(std::cout, report);
  else
    write_table(std::cout, report);
  return ok;
}

int cmd_compare(const std::string& file, std::size_t max_len) {
  auto t = load(file);
  auto verdict = test_functionality(t);
  if (!verdict.functional) {
    std::cout << "not functional: " << verdict.witness->describe() << '\n';
    return rejected;
  }
  CompileOptions opts;
  opts.max_states = max_states_from_env();
  auto mge = compile(verdict, opts);

  std::optional<DescribedBimachine> classical;
  std::string classical_note;
  if (t.monoid.kind() != MonoidDescriptor::Kind::free) {
    classical_note = "needs free-monoid outputs";
  } else {
    auto deduped = t;
    remove_duplicate_transitions(deduped);
    if (!check_pseudo_deterministic(deduped))
      classical_note = "input is not pseudo-deterministic";
    else
      classical = classical_compile(t, opts);
  }

  std::size_t words = 0, mge_bad = 0, classical_bad = 0;
  std::optional<Word> first_bad;
  for (std::size_t len = 0; len <= max_len; ++len) {
    Word u(len, 0);
    bool more = true;
    while (more) {
      ++words;
      auto expected = enumerate_outputs(t, u, default_path_bound(t, u.size()));
      std::optional<MonoidValue> want;
      if (!expected.empty()) want = *expected.begin();
      if (mge.evaluate(u) != want) {
        ++mge_bad;
        if (!first_bad) first_bad = u;
      }
      if (classical && classical->evaluate(u) != want) {
        ++classical_bad;
        if (!first_bad) first_bad = u;
      }
      more = false;
      for (std::size_t i = len; i-- > 0;) {
        if (++u[i] < t.alphabet.size()) {
          more = true;
          break;
        }
        u[i] = 0;
      }
    }
  }
  std::cout << "words " << words << '\n';
  std::cout << "mge " << (words - mge_bad) << "/" << words << " agree\n";
  if (classical)
    std::cout << "classical " << (words - classical_bad) << "/" << words << " agree\n";
  else
    std::cout << "classical skipped: " << classical_note << '\n';
  if (first_bad) {
    std::cout << "first disagreement on '" << format_word(t.alphabet, *first_bad) << "'\n";
    return rejected;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functionality checks and bimachine compilation for monoidal transducers"};
  app.require_subcommand(1);

  std::string file, out, method = "mge", bench_method = "both", input, format = "table";
  bool stats = false;
  std::size_t max_n = 5, max_len = 5;
  BenchLimits limits;

  auto* check = app.add_subcommand("check", "Decide whether a transducer is functional (exit 0 yes, 1 no)");
  check->add_option("file", file, "Transducer file")->required();

  auto* comp = app.add_subcommand("compile", "Compile a functional transducer into a bimachine");
  comp->add_option("file", file, "Transducer file")->required();
  comp->add_option("-o,--output", out, "Bimachine output file")->required();
  comp->add_option("--method", method, "Construction")->check(CLI::IsMember({"mge", "classical"}));
  comp->add_flag("--stats", stats, "Print state counts and build time");

  auto* run = app.add_subcommand("run", "Evaluate a bimachine on one input word");
  run->add_option("file", file, "Bimachine file")->required();
  run->add_option("--input", input, "Input word, symbols separated by spaces or commas, or concatenated")->required();

  auto* bench = app.add_subcommand("bench-tn", "State counts of both constructions on the T_n family");
  bench->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);
  bench->add_option("--method", bench_method, "Construction")->check(CLI::IsMember({"mge", "classical", "both"}));
  bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "table"}));
  bench->add_option("--mge-limit", limits.mge, "Skip mge rows above this n")->capture_default_str();
  bench->add_option("--classical-limit", limits.classical, "Skip classical rows above this n")->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "Cross-check both compilers against the path oracle");
  cmp->add_option("file", file, "Transducer file")->required();
  cmp->add_option("--max-len", max_len, "Longest input word to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*comp) return cmd_compile(file, out, method, stats);
    if (*run) return cmd_run(file, input);
    if (*bench) return cmd_bench(max_n, bench_method, format, limits);
    if (*cmp) return cmd_compare(file, max_len);
  } catch (const UsageError& e) {
    std::cerr << "bimc: " << e.what() << '\n';
    return usage;
  } catch (const IoError& e) {
    std::cerr << "bimc: " << e.what() << '\n';
    return io;
  } catch (const ParseError& e) {
    std::cerr << "bimc: " << file << ": " << e.what() << '\n';
    return data;
  } catch (const InvariantViolation& e) {
    std::cerr << "bimc: internal error: " << e.what() << '\n';
    return software;
  } catch (const std::exception& e) {
    std::cerr << "bimc: " << e.what() << '\n';
    return rejected;
  }
  return usage;
}
