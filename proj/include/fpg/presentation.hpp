#pragma once

// Finitely presented groups and special semigroup presentations, plus the
// constructions that operate on whole presentations: free product, direct
// product with a cyclic group, abelianization, homomorphism application.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpg/word.hpp"

namespace fpg {

// Generator names: nonempty, not the literal "1" (reserved for the empty
// word), no '^', no whitespace.
inline bool valid_generator_name(const std::string& s) {
  if (s.empty() || s == "1") return false;
  for (char c : s)
    if (c == '^' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      return false;
  return true;
}

struct GroupPresentation {
  std::string name;
  std::vector<std::string> gens;
  std::vector<Word> relators;

  std::size_t num_gens() const { return gens.size(); }

  std::optional<std::int32_t> gen_index(const std::string& g) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == g) return static_cast<std::int32_t>(i);
    return std::nullopt;
  }

  void check() const {
    std::set<std::string> seen;
    for (const auto& g : gens) {
      if (!valid_generator_name(g))
        throw std::invalid_argument("bad generator name: '" + g + "'");
      if (!seen.insert(g).second)
        throw std::invalid_argument("duplicate generator name: '" + g + "'");
    }
    for (const Word& r : relators)
      for (const Letter& l : r.letters)
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= gens.size())
          throw std::invalid_argument("relator letter outside generator set");
  }
};

// A group homomorphism given on generators of the source; images are words
// over the target's generators. Index i maps source generator i.
struct Homomorphism {
  std::vector<Word> images;
};

inline Word apply_hom(const Homomorphism& h, const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= h.images.size())
      throw std::out_of_range("apply_hom: letter outside domain generators");
    const Word& img = h.images[static_cast<std::size_t>(l.gen)];
    if (l.sign > 0)
      out.append(img);
    else
      out.append(img.inverse());
  }
  return free_reduce(out);
}

// Disambiguate `base` against `taken` by appending primes.
inline std::string fresh_name(std::string base,
                              const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

// Free product: generators of P then generators of Q (Q's renamed with primes
// on clash), relators of P then relators of Q (shifted).
inline GroupPresentation free_product(const GroupPresentation& p,
                                      const GroupPresentation& q) {
  GroupPresentation out;
  out.name = p.name + "*" + q.name;
  out.gens = p.gens;
  std::set<std::string> taken(p.gens.begin(), p.gens.end());
  for (const auto& g : q.gens) {
    std::string n = fresh_name(g, taken);
    taken.insert(n);
    out.gens.push_back(n);
  }
  out.relators = p.relators;
  const std::int32_t shift = static_cast<std::int32_t>(p.gens.size());
  for (const Word& r : q.relators) {
    Word s = r;
    for (Letter& l : s.letters) l.gen += shift;
    out.relators.push_back(std::move(s));
  }
  return out;
}

// P x Z/m: append one new central generator z with z^m = 1.
inline GroupPresentation direct_product_with_cyclic(const GroupPresentation& p,
                                                    std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclic order must be positive");
  GroupPresentation out = p;
  out.name = p.name + "xC" + std::to_string(m);
  std::set<std::string> taken(p.gens.begin(), p.gens.end());
  const std::string zname = fresh_name("z", taken);
  const std::int32_t z = static_cast<std::int32_t>(out.gens.size());
  out.gens.push_back(zname);
  out.relators.push_back(power_word(z, static_cast<std::int64_t>(m)));
  for (std::int32_t i = 0; i < z; ++i)
    out.relators.push_back(
        commutator(letter_word(pos(i)), letter_word(pos(z))));
  return out;
}

// Append commutators [g_i, g_j] for all i < j, in lexicographic (i, j) order.
inline GroupPresentation abelianized_presentation(const GroupPresentation& p) {
  GroupPresentation out = p;
  out.name = p.name + "_ab";
  const std::int32_t n = static_cast<std::int32_t>(p.gens.size());
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = i + 1; j < n; ++j)
      out.relators.push_back(
          commutator(letter_word(pos(i)), letter_word(pos(j))));
  return out;
}

// ---------------------------------------------------------------------------
// Special semigroup presentations. Letters split into s-letters and q-letters;
// relations are pairs of positive words, each side of the shape
// (s-word) q-letter (s-word).

// A positive semigroup word over the combined letter space: indices
// 0..S-1 name s-letters, S..S+Q-1 name q-letters.
using SgWord = std::vector<std::uint32_t>;

struct SemigroupRelation {
  SgWord lhs;
  SgWord rhs;
  friend bool operator==(const SemigroupRelation&,
                         const SemigroupRelation&) = default;
};

struct SemigroupPresentation {
  std::string name;
  std::vector<std::string> s_letters;
  std::vector<std::string> q_letters;
  std::vector<SemigroupRelation> relations;

  std::size_t num_s() const { return s_letters.size(); }
  std::size_t num_q() const { return q_letters.size(); }
  std::size_t num_letters() const { return num_s() + num_q(); }

  bool is_q(std::uint32_t letter) const { return letter >= num_s(); }

  const std::string& letter_name(std::uint32_t letter) const {
    return is_q(letter) ? q_letters[letter - num_s()] : s_letters[letter];
  }

  std::optional<std::uint32_t> letter_index(const std::string& n) const {
    for (std::size_t i = 0; i < s_letters.size(); ++i)
      if (s_letters[i] == n) return static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < q_letters.size(); ++i)
      if (q_letters[i] == n)
        return static_cast<std::uint32_t>(num_s() + i);
    return std::nullopt;
  }
};

// Decomposition of a special word F q G (F, G positive s-words).
struct SpecialForm {
  SgWord f;
  std::uint32_t q;
  SgWord g;
};

// Require exactly one q-letter in w and split around it.
inline SpecialForm special_form(const SemigroupPresentation& sg,
                                const SgWord& w) {
  SpecialForm out{};
  bool found = false;
  for (std::uint32_t letter : w) {
    if (letter >= sg.num_letters())
      throw std::invalid_argument("semigroup word letter out of range");
    if (sg.is_q(letter)) {
      if (found)
        throw std::invalid_argument("special word has more than one q-letter");
      found = true;
      out.q = letter;
    } else {
      (found ? out.g : out.f).push_back(letter);
    }
  }
  if (!found)
    throw std::invalid_argument("special word has no q-letter");
  return out;
}

// Full well-formedness check: names valid and distinct across both classes,
// every relation side of special form.
inline void check_special(const SemigroupPresentation& sg) {
  std::set<std::string> seen;
  for (const auto& n : sg.s_letters) {
    if (!valid_generator_name(n))
      throw std::invalid_argument("bad s-letter name: '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate letter name: '" + n + "'");
  }
  for (const auto& n : sg.q_letters) {
    if (!valid_generator_name(n))
      throw std::invalid_argument("bad q-letter name: '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate letter name: '" + n + "'");
  }
  for (const auto& rel : sg.relations) {
    special_form(sg, rel.lhs);
    special_form(sg, rel.rhs);
  }
}

}  // namespace fpg
