#ifndef BIMC_BENCH_TN_HPP
#define BIMC_BENCH_TN_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimc/compiler/classical.hpp"
#include "bimc/compiler/equalizer.hpp"
#include "bimc/fsa/transducer.hpp"
#include "bimc/monoid/descriptor.hpp"

namespace bimc {

/// The n + 2 state family: s = 0, q_i = i, f = n + 1, inputs a1..an, unary output.
inline Transducer<MonoidDescriptor> make_tn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_tn: n must be positive");
  std::vector<std::string> tokens;
  for (std::size_t j = 1; j <= n; ++j) tokens.push_back("a" + std::to_string(j));
  Transducer<MonoidDescriptor> t{MonoidDescriptor::free_over("1"), Alphabet(std::move(tokens)), n + 2, {0},
                                 {static_cast<State>(n + 1)}, {}};
  auto ones = [](std::size_t k) { return MonoidValue::word(Word(k, 0)); };
  auto q = [](std::size_t i) { return static_cast<State>(i); };
  auto a = [](std::size_t j) { return static_cast<Symbol>(j - 1); };
  const State f = q(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) t.transitions.push_back({0, a(j), ones(i - 1), q(i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == 1)
        t.transitions.push_back({q(1), a(j), ones(n + j - 1), q(j)});
      else if (i == j)
        t.transitions.push_back({q(i), a(j), ones(n - j + 1), q(1)});
      else
        t.transitions.push_back({q(i), a(j), ones(n), q(i)});
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) t.transitions.push_back({q(i), a(j), ones(2 * n - i + 1), f});
  return t;
}

enum class BenchMethod { mge, classical };

inline std::string to_string(BenchMethod m) { return m == BenchMethod::mge ? "mge" : "classical"; }

struct BenchRow {
  std::size_t n = 0;
  BenchMethod method = BenchMethod::mge;
  bool skipped = false;
  std::string reason;
  CompileStats stats;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by (n, method)
};

struct BenchLimits {
  std::size_t mge = 8;
  std::size_t classical = 7;
  std::size_t max_states = kNoLimit;
};

/// Compiles T_1..T_maxN with each requested method. Rows above the method's
/// safety limit, or hitting the state cap, are marked skipped.
inline BenchReport run_bench(std::size_t max_n, const std::set<BenchMethod>& methods, const BenchLimits& limits = {}) {
  BenchReport report;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto t = make_tn(n);
    for (BenchMethod m : methods) {
      BenchRow row{n, m, false, {}, {}};
      std::size_t limit = m == BenchMethod::mge ? limits.mge : limits.classical;
      if (n > limit) {
        row.skipped = true;
        row.reason = "above safety limit " + std::to_string(limit);
      } else {
        CompileOptions opts;
        opts.max_states = limits.max_states;
        try {
          if (m == BenchMethod::mge)
            compile(t, opts, &row.stats);
          else
            classical_compile(t, opts, &row.stats);
        } catch (const StateLimitExceeded& e) {
          row.skipped = true;
          row.reason = e.what();
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline void write_csv(std::ostream& os, const BenchReport& report) {
  os << "n,method,left_states,right_states,intermediate_states,psi_entries,build_ms\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << to_string(r.method) << ',';
    if (r.skipped) {
      os << "skipped,skipped,skipped,skipped,skipped\n";
      continue;
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.stats.build_ms);
    os << r.stats.left_states << ',' << r.stats.right_states << ',';
    if (r.method == BenchMethod::classical) os << r.stats.intermediate_states;
    os << ',' << r.stats.psi_entries << ',' << ms << '\n';
  }
}

inline void write_table(std::ostream& os, const BenchReport& report) {
  std::vector<std::vector<std::string>> cells{
      {"n", "method", "left", "right", "intermediate", "psi", "ms"}};
  for (const auto& r : report.rows) {
    if (r.skipped) {
      cells.push_back({std::to_string(r.n), to_string(r.method), "-", "-", "-", "-", "skipped"});
      continue;
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.stats.build_ms);
    cells.push_back({std::to_string(r.n), to_string(r.method), std::to_string(r.stats.left_states),
                     std::to_string(r.stats.right_states),
                     r.method == BenchMethod::classical ? std::to_string(r.stats.intermediate_states) : "-",
                     std::to_string(r.stats.psi_entries), ms});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
}

}  // namespace bimc

#endif
