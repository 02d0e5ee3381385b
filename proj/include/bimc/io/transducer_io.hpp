#ifndef BIMC_IO_TRANSDUCER_IO_HPP
#define BIMC_IO_TRANSDUCER_IO_HPP

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bimc/fsa/transducer.hpp"
#include "bimc/monoid/descriptor.hpp"
#include "bimc/monoid/literal.hpp"

namespace bimc {

/// Malformed input text; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using DescribedTransducer = Transducer<MonoidDescriptor>;

namespace detail {

inline std::string_view trim_view(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_index(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace detail

/// Parses the line-based transducer format:
///
///     monoid free:ab
///     alphabet x y
///     states 2
///     initial 0
///     final 1
///     t 0 x "ab" 1
///     t 1 - "" 1      # epsilon input
///
/// Duplicate transitions are dropped; each drop appends a note to `warnings`.
inline DescribedTransducer parse_transducer(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::optional<MonoidDescriptor> monoid;
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> num_states;
  StateSet initial, final;
  bool seen_initial = false, seen_final = false;
  struct Row {
    std::size_t line;
    State src;
    Symbol input;
    std::string value;
    State dst;
  };
  std::vector<Row> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim_view(line);
    if (line.empty()) continue;
    auto words = detail::split_ws(line);
    std::string_view key = words[0];
    auto rest = detail::trim_view(line.substr(key.size()));

    auto need_header = [&](const char* what) {
      if (!num_states) throw ParseError(line_no, std::string(what) + " before 'states'");
    };
    auto states_list = [&](StateSet& out, bool& seen) {
      need_header(std::string(key).c_str());
      if (seen) throw ParseError(line_no, "repeated '" + std::string(key) + "'");
      seen = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        auto q = detail::parse_index(words[i], line_no, "state index");
        if (q >= *num_states) throw ParseError(line_no, "undeclared state " + std::string(words[i]));
        out.push_back(static_cast<State>(q));
      }
      out = normalized(std::move(out));
    };

    if (key == "monoid") {
      if (monoid) throw ParseError(line_no, "repeated 'monoid'");
      try {
        monoid = parse_descriptor(rest);
      } catch (const LiteralError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "alphabet") {
      if (alphabet) throw ParseError(line_no, "repeated 'alphabet'");
      std::vector<std::string> tokens;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i] == "-") throw ParseError(line_no, "'-' is reserved for epsilon");
        tokens.emplace_back(words[i]);
      }
      try {
        alphabet = Alphabet(std::move(tokens));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "states") {
      if (num_states) throw ParseError(line_no, "repeated 'states'");
      if (words.size() != 2) throw ParseError(line_no, "'states' takes one count");
      num_states = detail::parse_index(words[1], line_no, "state count");
    } else if (key == "initial") {
      states_list(initial, seen_initial);
    } else if (key == "final") {
      states_list(final, seen_final);
    } else if (key == "t") {
      need_header("transition");
      if (!alphabet) throw ParseError(line_no, "transition before 'alphabet'");
      if (words.size() < 5) throw ParseError(line_no, "transition needs: t <src> <sym|-> <value> <dst>");
      auto src = detail::parse_index(words[1], line_no, "source state");
      auto dst = detail::parse_index(words.back(), line_no, "target state");
      if (src >= *num_states) throw ParseError(line_no, "undeclared state " + std::string(words[1]));
      if (dst >= *num_states) throw ParseError(line_no, "undeclared state " + std::string(words.back()));
      Symbol input = kEpsilon;
      if (words[2] != "-") {
        auto s = alphabet->find(words[2]);
        if (!s) throw ParseError(line_no, "undeclared symbol '" + std::string(words[2]) + "'");
        input = *s;
      }
      auto begin = words[3].data() - line.data();
      auto end = words.back().data() - line.data();
      rows.push_back({line_no, static_cast<State>(src), input,
                      std::string(detail::trim_view(line.substr(begin, end - begin))), static_cast<State>(dst)});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!monoid) throw ParseError(0, "missing 'monoid'");
  if (!alphabet) throw ParseError(0, "missing 'alphabet'");
  if (!num_states) throw ParseError(0, "missing 'states'");

  DescribedTransducer t{*monoid, *alphabet, *num_states, initial, final, {}};
  for (const auto& r : rows) {
    try {
      t.transitions.push_back({r.src, r.input, parse_value(*monoid, r.value), r.dst});
    } catch (const LiteralError& e) {
      throw ParseError(r.line, e.what());
    }
  }
  std::vector<typename DescribedTransducer::Transition> seen;
  std::vector<typename DescribedTransducer::Transition> kept;
  for (std::size_t i = 0; i < t.transitions.size(); ++i) {
    const auto& tr = t.transitions[i];
    auto it = std::lower_bound(seen.begin(), seen.end(), tr);
    if (it != seen.end() && *it == tr) {
      if (warnings) warnings->push_back("line " + std::to_string(rows[i].line) + ": duplicate transition dropped");
      continue;
    }
    seen.insert(it, tr);
    kept.push_back(tr);
  }
  t.transitions = std::move(kept);
  return t;
}

inline std::string serialize_transducer(const DescribedTransducer& t) {
  std::ostringstream os;
  os << "monoid " << t.monoid.literal() << '\n';
  os << "alphabet";
  for (const auto& tok : t.alphabet.tokens()) os << ' ' << tok;
  os << "\nstates " << t.num_states << "\ninitial";
  for (State q : t.initial) os << ' ' << q;
  os << "\nfinal";
  for (State q : t.final) os << ' ' << q;
  os << '\n';
  for (const auto& tr : t.transitions)
    os << "t " << tr.src << ' ' << (tr.is_epsilon() ? std::string("-") : t.alphabet.token(tr.input)) << ' '
       << t.monoid.format(tr.output) << ' ' << tr.dst << '\n';
  return os.str();
}

inline DescribedTransducer read_transducer(const std::string& path, std::vector<std::string>* warnings = nullptr) {
  return parse_transducer(detail::read_file(path), warnings);
}

}  // namespace bimc

#endif
