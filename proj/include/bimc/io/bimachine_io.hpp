#ifndef BIMC_IO_BIMACHINE_IO_HPP
#define BIMC_IO_BIMACHINE_IO_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bimc/bimachine.hpp"
#include "bimc/io/transducer_io.hpp"
#include "bimc/monoid/descriptor.hpp"
#include "bimc/monoid/literal.hpp"

namespace bimc {

using DescribedBimachine = Bimachine<MonoidDescriptor>;

namespace detail {

inline void write_dfa(std::ostream& os, const char* section, const Dfa& d, const Alphabet& alphabet) {
  os << section << '\n' << "states " << d.num_states << '\n' << "start " << d.start << '\n';
  for (DfaState s = 0; s < d.num_states; ++s)
    for (Symbol a = 0; a < d.num_symbols; ++a)
      if (auto t = d.next(s, a)) os << "δ " << s << ' ' << alphabet.token(a) << ' ' << *t << '\n';
}

}  // namespace detail

/// Text form: `BIM v1 <descriptor>`, `alphabet ...`, then LEFT / RIGHT
/// sections (`states n`, `start s`, `δ s sym s` rows), a PSI section of
/// `l sym r value` rows and an optional `EPS value` line. Rows are sorted, so
/// equal bimachines serialize identically.
inline std::string serialize_bimachine(const DescribedBimachine& b) {
  std::ostringstream os;
  os << "BIM v1 " << b.monoid.literal() << '\n';
  os << "alphabet";
  for (const auto& tok : b.alphabet.tokens()) os << ' ' << tok;
  os << '\n';
  detail::write_dfa(os, "LEFT", b.left, b.alphabet);
  detail::write_dfa(os, "RIGHT", b.right, b.alphabet);
  os << "PSI\n";
  std::vector<PsiKey> keys;
  keys.reserve(b.psi.size());
  for (const auto& [k, v] : b.psi) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys)
    os << k.left << ' ' << b.alphabet.token(k.symbol) << ' ' << k.right << ' ' << b.monoid.format(b.psi.at(k)) << '\n';
  if (b.epsilon_output) os << "EPS " << b.monoid.format(*b.epsilon_output) << '\n';
  return os.str();
}

inline DescribedBimachine parse_bimachine(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  std::size_t i = 0;
  auto next_line = [&]() -> std::optional<std::string_view> {
    while (i < lines.size()) {
      auto l = detail::trim_view(lines[i++]);
      if (!l.empty()) return l;
    }
    return std::nullopt;
  };
  auto line_no = [&] { return i; };

  auto header = next_line();
  if (!header || header->substr(0, 7) != "BIM v1 ") throw ParseError(line_no(), "expected 'BIM v1 <descriptor>' header");
  MonoidDescriptor monoid = [&] {
    try {
      return parse_descriptor(header->substr(7));
    } catch (const LiteralError& e) {
      throw ParseError(line_no(), e.what());
    }
  }();
  auto alpha_line = next_line();
  if (!alpha_line) throw ParseError(line_no(), "missing 'alphabet' line");
  auto alpha_words = detail::split_ws(*alpha_line);
  if (alpha_words.empty() || alpha_words[0] != "alphabet") throw ParseError(line_no(), "expected 'alphabet'");
  std::vector<std::string> tokens(alpha_words.begin() + 1, alpha_words.end());
  Alphabet alphabet = [&] {
    try {
      return Alphabet(tokens);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no(), e.what());
    }
  }();

  DescribedBimachine b{monoid, alphabet, {}, {}, {}, std::nullopt};
  auto symbol = [&](std::string_view tok) {
    auto s = alphabet.find(tok);
    if (!s) throw ParseError(line_no(), "undeclared symbol '" + std::string(tok) + "'");
    return *s;
  };

  auto read_dfa = [&](const char* section, Dfa& d, std::optional<std::string_view>& line) {
    if (!line || *line != section) throw ParseError(line_no(), std::string("expected section ") + section);
    auto states = next_line();
    auto w = states ? detail::split_ws(*states) : std::vector<std::string_view>{};
    if (w.size() != 2 || w[0] != "states") throw ParseError(line_no(), "expected 'states <count>'");
    d.num_symbols = alphabet.size();
    d.num_states = detail::parse_index(w[1], line_no(), "state count");
    d.table.assign(d.num_states * d.num_symbols, kNoState);
    auto start = next_line();
    w = start ? detail::split_ws(*start) : std::vector<std::string_view>{};
    if (w.size() != 2 || w[0] != "start") throw ParseError(line_no(), "expected 'start <state>'");
    d.start = static_cast<DfaState>(detail::parse_index(w[1], line_no(), "start state"));
    if (d.start >= d.num_states) throw ParseError(line_no(), "start state out of range");
    for (line = next_line(); line; line = next_line()) {
      w = detail::split_ws(*line);
      if (w[0] != "δ" && w[0] != "d") break;
      if (w.size() != 4) throw ParseError(line_no(), "expected 'δ <state> <symbol> <state>'");
      auto s = detail::parse_index(w[1], line_no(), "state");
      auto t = detail::parse_index(w[3], line_no(), "state");
      if (s >= d.num_states || t >= d.num_states) throw ParseError(line_no(), "state out of range");
      d.table[s * d.num_symbols + symbol(w[2])] = static_cast<DfaState>(t);
    }
  };

  auto line = next_line();
  read_dfa("LEFT", b.left, line);
  read_dfa("RIGHT", b.right, line);
  if (!line || *line != "PSI") throw ParseError(line_no(), "expected section PSI");
  for (line = next_line(); line; line = next_line()) {
    auto w = detail::split_ws(*line);
    try {
      if (w[0] == "EPS") {
        if (b.epsilon_output) throw ParseError(line_no(), "repeated EPS");
        b.epsilon_output = parse_value(monoid, detail::trim_view(line->substr(3)));
        continue;
      }
      if (w.size() < 4) throw ParseError(line_no(), "expected '<l> <symbol> <r> <value>'");
      auto l = detail::parse_index(w[0], line_no(), "left state");
      auto r = detail::parse_index(w[2], line_no(), "right state");
      if (l >= b.left.num_states || r >= b.right.num_states) throw ParseError(line_no(), "state out of range");
      auto value_text = line->substr(static_cast<std::size_t>(w[3].data() - line->data()));
      PsiKey key{static_cast<DfaState>(l), symbol(w[1]), static_cast<DfaState>(r)};
      if (!b.psi.emplace(key, parse_value(monoid, value_text)).second) throw ParseError(line_no(), "repeated PSI entry");
    } catch (const LiteralError& e) {
      throw ParseError(line_no(), e.what());
    }
  }
  return b;
}

inline DescribedBimachine read_bimachine(const std::string& path) { return parse_bimachine(detail::read_file(path)); }

}  // namespace bimc

#endif
