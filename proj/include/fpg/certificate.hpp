#pragma once

// Triviality certificates: a word w is trivial in <X | R> iff it equals, in
// the free group, a product of conjugates of relators. A certificate lists
// entries (relator index, sign, conjugator u); its product is
//   prod_i  u_i r_{k_i}^{sign_i} u_i^{-1}
// in the listed order, and it proves `target` when that product freely
// reduces to the target word. Verification streams the concatenation through
// a reduction stack, so a certificate is checkable in time linear in its
// total symbol count without materializing the product.

#include <cstdint>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

struct CertEntry {
  std::uint32_t relator = 0;
  std::int32_t sign = +1;  // +1 or -1
  Word conjugator;

  friend bool operator==(const CertEntry&, const CertEntry&) = default;
};

struct TrivialityCertificate {
  Word target;
  std::vector<CertEntry> entries;

  friend bool operator==(const TrivialityCertificate&,
                         const TrivialityCertificate&) = default;

  std::size_t total_symbols() const {
    std::size_t n = target.raw_length();
    for (const CertEntry& e : entries) n += 2 * e.conjugator.raw_length() + 1;
    return n;
  }
};

namespace detail {
inline void push_reduced(std::vector<Letter>& stack, const Letter& l) {
  if (!stack.empty() && stack.back().gen == l.gen &&
      stack.back().sign == -l.sign)
    stack.pop_back();
  else
    stack.push_back(l);
}
inline void push_reduced(std::vector<Letter>& stack, const Word& w,
                         bool invert) {
  if (!invert) {
    for (const Letter& l : w.letters) push_reduced(stack, l);
  } else {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      push_reduced(stack, it->inverse());
  }
}
}  // namespace detail

struct CertCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

inline CertCheck check_certificate(const GroupPresentation& p,
                                   const TrivialityCertificate& c) {
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const CertEntry& e = c.entries[i];
    if (e.relator >= p.relators.size())
      return {false, "entry " + std::to_string(i) + ": relator index " +
                         std::to_string(e.relator) + " out of range"};
    if (e.sign != 1 && e.sign != -1)
      return {false, "entry " + std::to_string(i) + ": sign must be +1 or -1"};
    for (const Letter& l : e.conjugator.letters)
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
        return {false, "entry " + std::to_string(i) +
                           ": conjugator letter outside generator set"};
  }
  for (const Letter& l : c.target.letters)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
      return {false, "target letter outside generator set"};

  std::vector<Letter> stack;
  for (const CertEntry& e : c.entries) {
    detail::push_reduced(stack, e.conjugator, false);
    detail::push_reduced(stack, p.relators[e.relator], e.sign < 0);
    detail::push_reduced(stack, e.conjugator, true);
  }
  const Word reduced_target = free_reduce(c.target);
  if (Word{std::move(stack)} != reduced_target)
    return {false, "certificate product does not reduce to the target"};
  return {true, ""};
}

inline bool verify_certificate(const GroupPresentation& p,
                               const TrivialityCertificate& c) {
  return check_certificate(p, c).ok;
}

// Certificate combinators. A certificate with entry product freely equal to
// A * B^{-1} acts as a proof of the rewrite A => B; these operations compose
// such proofs without touching relator structure.

// Proof of LHS => RHS where relator k splits as LHS * RHS^{-1}; with sign -1,
// proof of RHS => LHS.
inline std::vector<CertEntry> cert_axiom(std::uint32_t relator,
                                         std::int32_t sign,
                                         Word conjugator = {}) {
  return {CertEntry{relator, sign, std::move(conjugator)}};
}

// From A => B derive B => A: reverse the entries and flip signs.
inline std::vector<CertEntry> cert_sym(const std::vector<CertEntry>& c) {
  std::vector<CertEntry> out;
  out.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    out.push_back(CertEntry{it->relator, -it->sign, it->conjugator});
  return out;
}

// From A => B derive P A Q => P B Q: conjugate every entry by P on the left.
// (Q does not appear: the product changes from A B^{-1} to P A B^{-1} P^{-1}.)
inline std::vector<CertEntry> cert_context(const Word& prefix,
                                           std::vector<CertEntry> c) {
  if (prefix.empty()) return c;
  for (CertEntry& e : c) {
    Word u = prefix;
    u.append(e.conjugator);
    e.conjugator = std::move(u);
  }
  return c;
}

// Chain A => B and B => C into A => C: concatenate.
inline std::vector<CertEntry> cert_trans(std::vector<CertEntry> a,
                                         const std::vector<CertEntry>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// From A => B derive A^{-1} => B^{-1}: symmetrize, then conjugate by A^{-1}.
inline std::vector<CertEntry> cert_inv_word(const Word& a,
                                            const std::vector<CertEntry>& c) {
  return cert_context(a.inverse(), cert_sym(c));
}

// Product of the entries as a free word (reduced); the A * B^{-1} value.
inline Word cert_product(const GroupPresentation& p,
                         const std::vector<CertEntry>& entries) {
  std::vector<Letter> stack;
  for (const CertEntry& e : entries) {
    detail::push_reduced(stack, e.conjugator, false);
    detail::push_reduced(stack, p.relators[e.relator], e.sign < 0);
    detail::push_reduced(stack, e.conjugator, true);
  }
  return Word{std::move(stack)};
}

}  // namespace fpg
