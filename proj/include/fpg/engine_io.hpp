#pragma once
// Text round-trip for engine artifacts: abelian invariants, closed coset
// tables, triviality proofs, and isomorphism witnesses.  Same conventions
// as the other formats: line-based, canonical printers, parse errors with
// line numbers, print(parse(print(x))) byte-identical to print(x).

#include <string>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/engines.hpp"
#include "fpg/format.hpp"

namespace fpg {

// ----- abelian invariants --------------------------------------------------

inline std::string print_abelian_invariants(const AbelianInvariants& inv) {
  std::string out = "free-rank " + std::to_string(inv.free_rank) + "\n";
  out += "torsion";
  for (const mpz_class& d : inv.torsion) out += " " + d.get_str();
  out += "\n";
  return out;
}

inline AbelianInvariants parse_abelian_invariants(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.size() < 2 || lines[0].rfind("free-rank ", 0) != 0)
    throw ParseError(1, "expected 'free-rank <n>'");
  AbelianInvariants inv;
  inv.free_rank = static_cast<std::size_t>(
      detail::parse_int(lines[0].substr(10), 1));
  const auto toks = detail::split_ws(lines[1]);
  if (toks.empty() || toks[0] != "torsion")
    throw ParseError(2, "expected 'torsion [d1 d2 ...]'");
  for (std::size_t i = 1; i < toks.size(); ++i) {
    try {
      inv.torsion.emplace_back(toks[i]);
    } catch (const std::invalid_argument&) {
      throw ParseError(2, "bad torsion coefficient '" + toks[i] + "'");
    }
  }
  return inv;
}

// ----- closed coset tables -------------------------------------------------

inline std::string print_coset_table(const CosetTable& t) {
  if (!t.closed)
    throw std::invalid_argument("only closed coset tables are serialized");
  std::string out = "table " + std::to_string(t.rows) + " " +
                    std::to_string(t.num_gens) + "\n";
  const std::size_t ncols = 2 * static_cast<std::size_t>(t.num_gens);
  for (std::uint32_t r = 0; r < t.rows; ++r) {
    out += "row";
    for (std::size_t c = 0; c < ncols; ++c)
      out += " " + std::to_string(t.act[r * ncols + c]);
    out += "\n";
  }
  return out;
}

inline CosetTable parse_coset_table(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("table ", 0) != 0)
    throw ParseError(1, "expected 'table <rows> <gens>'");
  const auto head = detail::split_ws(lines[0]);
  if (head.size() != 3) throw ParseError(1, "expected 'table <rows> <gens>'");
  CosetTable t;
  t.rows = static_cast<std::uint32_t>(detail::parse_int(head[1], 1));
  t.num_gens = static_cast<std::uint32_t>(detail::parse_int(head[2], 1));
  t.closed = true;
  const std::size_t ncols = 2 * static_cast<std::size_t>(t.num_gens);
  if (lines.size() != 1 + t.rows)
    throw ParseError(lines.size(), "expected " + std::to_string(t.rows) +
                                       " row lines");
  for (std::uint32_t r = 0; r < t.rows; ++r) {
    const std::size_t ln = 2 + r;
    const auto toks = detail::split_ws(lines[1 + r]);
    if (toks.empty() || toks[0] != "row" || toks.size() != 1 + ncols)
      throw ParseError(ln, "expected 'row' with " + std::to_string(ncols) +
                               " entries");
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::int64_t v = detail::parse_int(toks[1 + c], ln);
      if (v < 1 || v > t.rows)
        throw ParseError(ln, "coset out of range: " + toks[1 + c]);
      t.act.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return t;
}

// ----- triviality proofs ---------------------------------------------------

inline std::string print_trivial_proof(const TrivialProof& pr,
                                       const GroupPresentation& p) {
  if (pr.kind == TrivialProof::Kind::closed_table)
    return "proof closed-table\n" + print_coset_table(pr.table);
  std::string out =
      "proof certificates " + std::to_string(pr.gen_certs.size()) + "\n";
  for (const TrivialityCertificate& c : pr.gen_certs)
    out += print_certificate(c, p);
  return out;
}

namespace detail {

// Splits concatenated certificate blocks: each begins with a 'target' line.
inline std::vector<TrivialityCertificate> parse_certificate_blocks(
    const std::vector<std::string>& lines, std::size_t from, std::size_t count,
    const GroupPresentation& p) {
  std::vector<std::size_t> starts;
  for (std::size_t i = from; i < lines.size(); ++i)
    if (lines[i].rfind("target", 0) == 0) starts.push_back(i);
  if (starts.size() != count || (count > 0 && starts[0] != from))
    throw ParseError(from + 1, "expected " + std::to_string(count) +
                                   " certificate blocks");
  std::vector<TrivialityCertificate> out;
  for (std::size_t b = 0; b < count; ++b) {
    const std::size_t lo = starts[b];
    const std::size_t hi = b + 1 < count ? starts[b + 1] : lines.size();
    std::string block;
    for (std::size_t i = lo; i < hi; ++i) block += lines[i] + "\n";
    out.push_back(parse_certificate(block, p));
  }
  return out;
}

}  // namespace detail

inline TrivialProof parse_trivial_proof(const std::string& text,
                                        const GroupPresentation& p) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty proof");
  TrivialProof pr;
  if (lines[0] == "proof closed-table") {
    std::string rest;
    for (std::size_t i = 1; i < lines.size(); ++i) rest += lines[i] + "\n";
    pr.kind = TrivialProof::Kind::closed_table;
    pr.table = parse_coset_table(rest);
    if (pr.table.rows != 1)
      throw ParseError(2, "a closed-table triviality proof needs one coset");
    pr.strategy = "closed coset table (parsed)";
    return pr;
  }
  if (lines[0].rfind("proof certificates ", 0) == 0) {
    const std::size_t n = static_cast<std::size_t>(
        detail::parse_int(lines[0].substr(19), 1));
    if (n != p.gens.size())
      throw ParseError(1, "proof must cover all " +
                              std::to_string(p.gens.size()) + " generators");
    pr.kind = TrivialProof::Kind::generator_certificates;
    pr.gen_certs = detail::parse_certificate_blocks(lines, 1, n, p);
    pr.strategy = "generator certificates (parsed)";
    return pr;
  }
  throw ParseError(1, "expected 'proof closed-table' or 'proof certificates'");
}

// Checks a parsed (or constructed) proof against its presentation: a closed
// one-coset table consistent with the relators, or a verified certificate
// targeting each generator in order.
inline bool verify_trivial_proof(const GroupPresentation& p,
                                 const TrivialProof& pr) {
  if (pr.kind == TrivialProof::Kind::closed_table)
    return pr.table.rows == 1 && coset_table_consistent(p, {}, pr.table);
  if (pr.gen_certs.size() != p.gens.size()) return false;
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    const TrivialityCertificate& c = pr.gen_certs[g];
    if (!freely_equal(c.target,
                      letter_word(pos(static_cast<std::int32_t>(g)))))
      return false;
    if (!verify_certificate(p, c)) return false;
  }
  return true;
}

// ----- isomorphism witnesses -----------------------------------------------

inline std::string print_iso_witness(const IsoWitness& w,
                                     const GroupPresentation& p,
                                     const GroupPresentation& q) {
  std::string out = "forward " + std::to_string(w.forward.size()) + "\n";
  for (const Word& im : w.forward) out += "image " + print_word(im, q.gens) + "\n";
  out += "backward " + std::to_string(w.backward.size()) + "\n";
  for (const Word& im : w.backward) out += "image " + print_word(im, p.gens) + "\n";
  const auto section = [](const std::string& name, std::size_t n) {
    return name + " " + std::to_string(n) + "\n";
  };
  out += section("forward-relator-certificates", w.forward_relator_certs.size());
  for (const auto& c : w.forward_relator_certs) out += print_certificate(c, q);
  out += section("backward-relator-certificates",
                 w.backward_relator_certs.size());
  for (const auto& c : w.backward_relator_certs) out += print_certificate(c, p);
  out += section("forward-inverse-certificates",
                 w.forward_inverse_certs.size());
  for (const auto& c : w.forward_inverse_certs) out += print_certificate(c, p);
  out += section("backward-inverse-certificates",
                 w.backward_inverse_certs.size());
  for (const auto& c : w.backward_inverse_certs) out += print_certificate(c, q);
  return out;
}

inline IsoWitness parse_iso_witness(const std::string& text,
                                    const GroupPresentation& p,
                                    const GroupPresentation& q) {
  const auto lines = detail::split_lines(text);
  std::size_t at = 0;
  const auto expect_count = [&](const std::string& key) -> std::size_t {
    if (at >= lines.size() || lines[at].rfind(key + " ", 0) != 0)
      throw ParseError(at + 1, "expected '" + key + " <n>'");
    const std::size_t n = static_cast<std::size_t>(
        detail::parse_int(lines[at].substr(key.size() + 1), at + 1));
    ++at;
    return n;
  };
  IsoWitness w;
  const auto read_images = [&](std::size_t n, const GroupPresentation& side,
                               std::vector<Word>& into) {
    for (std::size_t i = 0; i < n; ++i, ++at) {
      if (at >= lines.size() || lines[at].rfind("image ", 0) != 0)
        throw ParseError(at + 1, "expected 'image <word>'");
      into.push_back(parse_word(lines[at].substr(6), side, at + 1));
    }
  };
  read_images(expect_count("forward"), q, w.forward);
  read_images(expect_count("backward"), p, w.backward);
  const auto read_certs = [&](const std::string& key,
                              const GroupPresentation& side,
                              std::vector<TrivialityCertificate>& into) {
    const std::size_t n = expect_count(key);
    std::size_t end = at;
    std::size_t seen = 0;
    for (; end < lines.size(); ++end) {
      if (lines[end].rfind("target", 0) == 0) {
        if (seen == n) break;
        ++seen;
      } else if (lines[end].rfind("conj ", 0) != 0) {
        break;  // next section header
      }
    }
    into = detail::parse_certificate_blocks(
        std::vector<std::string>(lines.begin(), lines.begin() + end), at, n,
        side);
    at = end;
  };
  read_certs("forward-relator-certificates", q, w.forward_relator_certs);
  read_certs("backward-relator-certificates", p, w.backward_relator_certs);
  read_certs("forward-inverse-certificates", p, w.forward_inverse_certs);
  read_certs("backward-inverse-certificates", q, w.backward_inverse_certs);
  if (at != lines.size())
    throw ParseError(at + 1, "unexpected trailing content");
  return w;
}

}  // namespace fpg
