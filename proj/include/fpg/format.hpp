#pragma once

// Line-based text formats for every object that crosses the tool boundary:
// group presentations, semigroup presentations, machines, derivations, and
// triviality certificates. Printers emit a canonical form; parsing a printed
// file and printing it again is byte-identical. Parse errors carry a line
// number and a reason.
//
// Word grammar: space-separated terms, each  name  or  name^k  (k any nonzero
// integer; negative for inverses); the lone term  1  is the empty word.
// Generator names therefore may not be "1" or contain '^' or whitespace.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fpg/certificate.hpp"
#include "fpg/machine.hpp"
#include "fpg/post.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string_view ln = text.substr(start, i - start);
      if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
      lines.emplace_back(ln);
      start = i + 1;
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (b != e && *b == '+') ++b;  // allow explicit plus (printed signs)
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

// ----- group words ---------------------------------------------------------

inline std::string print_word(const Word& w,
                              const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    const Letter& l = w.letters[i];
    const std::int64_t e = static_cast<std::int64_t>(j - i) * l.sign;
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(l.gen));
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline Word parse_word(const std::vector<std::string>& toks,
                       const GroupPresentation& p, std::size_t line,
                       std::size_t from = 0, std::size_t to = SIZE_MAX) {
  if (to == SIZE_MAX) to = toks.size();
  Word w;
  if (to - from == 1 && toks[from] == "1") return w;
  for (std::size_t t = from; t < to; ++t) {
    const std::string& tok = toks[t];
    const std::size_t caret = tok.find('^');
    const std::string name = tok.substr(0, caret);
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      if (caret + 1 >= tok.size())
        throw ParseError(line, "missing exponent in '" + tok + "'");
      e = detail::parse_int(tok.substr(caret + 1), line);
    }
    auto gi = p.gen_index(name);
    if (!gi) throw ParseError(line, "unknown generator '" + name + "'");
    w.append(power_word(*gi, e));
  }
  return w;
}

inline Word parse_word(const std::string& text, const GroupPresentation& p,
                       std::size_t line = 0) {
  auto toks = detail::split_ws(text);
  if (toks.empty()) throw ParseError(line, "empty word (use '1')");
  return parse_word(toks, p, line);
}

// ----- group presentations -------------------------------------------------

inline std::string print_presentation(const GroupPresentation& p) {
  std::string out = "group " + p.name + "\n";
  out += "gens";
  for (const auto& g : p.gens) out += " " + g;
  out += "\n";
  for (const Word& r : p.relators) out += "rel " + print_word(r, p.gens) + "\n";
  return out;
}

inline GroupPresentation parse_presentation(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("group ", 0) != 0)
    throw ParseError(1, "expected 'group <name>'");
  GroupPresentation p;
  p.name = lines[0].substr(6);
  if (lines.size() < 2 || (lines[1] != "gens" && lines[1].rfind("gens ", 0) != 0))
    throw ParseError(2, "expected 'gens ...'");
  p.gens = detail::split_ws(std::string_view(lines[1]).substr(4));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].rfind("rel ", 0) != 0)
      throw ParseError(i + 1, "expected 'rel <word>'");
    p.relators.push_back(parse_word(lines[i].substr(4), p, i + 1));
  }
  p.check();
  return p;
}

// ----- semigroup words and presentations -----------------------------------

inline std::string print_sgword(const SgWord& w,
                                const SemigroupPresentation& sg) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += sg.letter_name(w[i]);
  }
  return out;
}

inline SgWord parse_sgword(const std::vector<std::string>& toks,
                           const SemigroupPresentation& sg, std::size_t line,
                           std::size_t from = 0, std::size_t to = SIZE_MAX) {
  if (to == SIZE_MAX) to = toks.size();
  SgWord w;
  if (to - from == 1 && toks[from] == "1") return w;
  for (std::size_t t = from; t < to; ++t) {
    auto idx = sg.letter_index(toks[t]);
    if (!idx) throw ParseError(line, "unknown letter '" + toks[t] + "'");
    w.push_back(*idx);
  }
  return w;
}

inline std::string print_semigroup(const SemigroupPresentation& sg) {
  std::string out = "semigroup " + sg.name + "\n";
  out += "sletters";
  for (const auto& n : sg.s_letters) out += " " + n;
  out += "\nqletters";
  for (const auto& n : sg.q_letters) out += " " + n;
  out += "\n";
  for (const auto& rel : sg.relations)
    out += "srel " + print_sgword(rel.lhs, sg) + " = " +
           print_sgword(rel.rhs, sg) + "\n";
  return out;
}

inline SemigroupPresentation parse_semigroup(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("semigroup ", 0) != 0)
    throw ParseError(1, "expected 'semigroup <name>'");
  SemigroupPresentation sg;
  sg.name = lines[0].substr(10);
  if (lines.size() < 3) throw ParseError(2, "expected letter lists");
  if (lines[1] != "sletters" && lines[1].rfind("sletters ", 0) != 0)
    throw ParseError(2, "expected 'sletters ...'");
  sg.s_letters = detail::split_ws(std::string_view(lines[1]).substr(8));
  if (lines[2] != "qletters" && lines[2].rfind("qletters ", 0) != 0)
    throw ParseError(3, "expected 'qletters ...'");
  sg.q_letters = detail::split_ws(std::string_view(lines[2]).substr(8));
  for (std::size_t i = 3; i < lines.size(); ++i) {
    if (lines[i].rfind("srel ", 0) != 0)
      throw ParseError(i + 1, "expected 'srel <lhs> = <rhs>'");
    auto toks = detail::split_ws(std::string_view(lines[i]).substr(5));
    std::size_t eq = toks.size();
    for (std::size_t t = 0; t < toks.size(); ++t)
      if (toks[t] == "=") {
        eq = t;
        break;
      }
    if (eq == toks.size())
      throw ParseError(i + 1, "missing '=' in semigroup relation");
    SemigroupRelation rel;
    rel.lhs = parse_sgword(toks, sg, i + 1, 0, eq);
    rel.rhs = parse_sgword(toks, sg, i + 1, eq + 1, toks.size());
    sg.relations.push_back(std::move(rel));
  }
  check_special(sg);
  return sg;
}

// ----- machines ------------------------------------------------------------

inline std::string print_machine(const TuringMachine& m) {
  std::string out = "machine " + m.name + "\n";
  out += "alphabet";
  for (const auto& a : m.alphabet) out += " " + a;
  out += "\nstates";
  for (const auto& s : m.states) out += " " + s;
  out += "\n";
  for (const Quad& q : m.quads) {
    out += "quad " + m.states[q.state] + " " + m.alphabet[q.sym] + " ";
    switch (q.act) {
      case ActType::Write:
        out += "write " + m.alphabet[q.write_sym];
        break;
      case ActType::MoveLeft:
        out += "L";
        break;
      case ActType::MoveRight:
        out += "R";
        break;
    }
    out += " " + m.states[q.next] + "\n";
  }
  return out;
}

inline TuringMachine parse_machine(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("machine ", 0) != 0)
    throw ParseError(1, "expected 'machine <name>'");
  TuringMachine m;
  m.name = lines[0].substr(8);
  if (lines.size() < 3 || lines[1].rfind("alphabet", 0) != 0)
    throw ParseError(2, "expected 'alphabet ...'");
  m.alphabet = detail::split_ws(std::string_view(lines[1]).substr(8));
  if (lines[2].rfind("states", 0) != 0)
    throw ParseError(3, "expected 'states ...'");
  m.states = detail::split_ws(std::string_view(lines[2]).substr(6));

  auto state_idx = [&](const std::string& n, std::size_t ln) {
    for (std::size_t i = 0; i < m.states.size(); ++i)
      if (m.states[i] == n) return static_cast<std::uint32_t>(i);
    throw ParseError(ln, "unknown state '" + n + "'");
  };
  auto sym_idx = [&](const std::string& n, std::size_t ln) {
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      if (m.alphabet[i] == n) return static_cast<std::uint32_t>(i);
    throw ParseError(ln, "unknown symbol '" + n + "'");
  };

  for (std::size_t i = 3; i < lines.size(); ++i) {
    if (lines[i].rfind("quad ", 0) != 0)
      throw ParseError(i + 1, "expected 'quad ...'");
    auto toks = detail::split_ws(std::string_view(lines[i]).substr(5));
    if (toks.size() < 4) throw ParseError(i + 1, "short quadruple line");
    Quad q{};
    q.state = state_idx(toks[0], i + 1);
    q.sym = sym_idx(toks[1], i + 1);
    if (toks[2] == "write") {
      if (toks.size() != 5)
        throw ParseError(i + 1, "write quadruple needs symbol and state");
      q.act = ActType::Write;
      q.write_sym = sym_idx(toks[3], i + 1);
      q.next = state_idx(toks[4], i + 1);
    } else if (toks[2] == "L" || toks[2] == "R") {
      if (toks.size() != 4)
        throw ParseError(i + 1, "move quadruple needs a target state");
      q.act = toks[2] == "L" ? ActType::MoveLeft : ActType::MoveRight;
      q.next = state_idx(toks[3], i + 1);
    } else {
      throw ParseError(i + 1, "unknown action '" + toks[2] + "'");
    }
    m.quads.push_back(q);
  }
  validate(m);
  return m;
}

// ----- derivations ---------------------------------------------------------

inline std::string print_derivation(const Derivation& d,
                                    const SemigroupPresentation& sg) {
  std::string out = "start " + print_sgword(d.start, sg) + "\n";
  out += "end " + print_sgword(d.end, sg) + "\n";
  for (const DerivStep& st : d.steps)
    out += "step " + std::to_string(st.rel) + " " +
           (st.dir == StepDir::LR ? "LR" : "RL") + " " +
           std::to_string(st.offset) + "\n";
  return out;
}

inline Derivation parse_derivation(const std::string& text,
                                   const SemigroupPresentation& sg) {
  auto lines = detail::split_lines(text);
  if (lines.size() < 2 || lines[0].rfind("start ", 0) != 0)
    throw ParseError(1, "expected 'start <word>'");
  if (lines[1].rfind("end ", 0) != 0)
    throw ParseError(2, "expected 'end <word>'");
  Derivation d;
  auto stoks = detail::split_ws(std::string_view(lines[0]).substr(6));
  d.start = parse_sgword(stoks, sg, 1);
  auto etoks = detail::split_ws(std::string_view(lines[1]).substr(4));
  d.end = parse_sgword(etoks, sg, 2);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].rfind("step ", 0) != 0)
      throw ParseError(i + 1, "expected 'step <rel> <LR|RL> <offset>'");
    auto toks = detail::split_ws(std::string_view(lines[i]).substr(5));
    if (toks.size() != 3) throw ParseError(i + 1, "step needs three fields");
    DerivStep st;
    st.rel = static_cast<std::uint32_t>(detail::parse_int(toks[0], i + 1));
    if (toks[1] == "LR")
      st.dir = StepDir::LR;
    else if (toks[1] == "RL")
      st.dir = StepDir::RL;
    else
      throw ParseError(i + 1, "direction must be LR or RL");
    st.offset = static_cast<std::uint32_t>(detail::parse_int(toks[2], i + 1));
    d.steps.push_back(st);
  }
  return d;
}

// ----- certificates --------------------------------------------------------

inline std::string print_certificate(const TrivialityCertificate& c,
                                     const GroupPresentation& p) {
  std::string out = "target " + print_word(c.target, p.gens) + "\n";
  for (const CertEntry& e : c.entries)
    out += "conj " + print_word(e.conjugator, p.gens) + " rel " +
           std::to_string(e.relator) + " sign " +
           (e.sign > 0 ? "+1" : "-1") + "\n";
  return out;
}

inline TrivialityCertificate parse_certificate(const std::string& text,
                                               const GroupPresentation& p) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("target ", 0) != 0)
    throw ParseError(1, "expected 'target <word>'");
  TrivialityCertificate c;
  c.target = parse_word(lines[0].substr(7), p, 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("conj ", 0) != 0)
      throw ParseError(i + 1, "expected 'conj <word> rel <k> sign <s>'");
    auto toks = detail::split_ws(std::string_view(lines[i]).substr(5));
    // layout: <word tokens...> rel <k> sign <s>
    if (toks.size() < 5 || toks[toks.size() - 4] != "rel" ||
        toks[toks.size() - 2] != "sign")
      throw ParseError(i + 1, "malformed certificate entry");
    CertEntry e;
    e.conjugator = parse_word(toks, p, i + 1, 0, toks.size() - 4);
    e.relator = static_cast<std::uint32_t>(
        detail::parse_int(toks[toks.size() - 3], i + 1));
    const std::int64_t s = detail::parse_int(toks[toks.size() - 1], i + 1);
    if (s != 1 && s != -1) throw ParseError(i + 1, "sign must be +1 or -1");
    e.sign = static_cast<std::int32_t>(s);
    c.entries.push_back(std::move(e));
  }
  return c;
}

// ----- file IO -------------------------------------------------------------

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write via a temp file in the same directory plus rename, so a crash never
// leaves a half-written artifact at the target path.
inline void write_text_file_atomic(const std::filesystem::path& path,
                                   const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace fpg
