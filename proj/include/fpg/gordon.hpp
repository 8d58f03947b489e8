#pragma once

// Gordon's presentation P(w) for the Adian-Rabin theorem: from P = <X | R>
// and a word w over X, adjoin fresh generators a, b, c and, after R, the
// relators (written as equations, stored as LHS * RHS^{-1})
//
//   a^-1 b a              = c^-1 b^-1 c b c
//   a^-2 b^-1 a b a^2     = c^-2 b^-1 c b c^2
//   a^-3 [w,b] a^3        = c^-3 b c^3
//   a^-(3+i) x_i b a^(3+i) = c^-(3+i) b c^(3+i)   for the i-th generator x_i
//
// (i counted from 1; [w,b] = w^-1 b^-1 w b). The result presents the trivial
// group exactly when w = e in P; otherwise P embeds in it. Every output
// abelianizes trivially, and a non-trivial output has rank exactly 2,
// generated by b and c a^-1.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "fpg/format.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

inline GroupPresentation gordon(const GroupPresentation& p, const Word& w) {
  p.check();
  for (const Letter& l : w.letters)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
      throw std::invalid_argument("gordon: word letter outside generator set");

  GroupPresentation out;
  out.name = p.name + "(" + print_word(w, p.gens) + ")";
  out.gens = p.gens;
  out.relators = p.relators;

  std::set<std::string> taken(p.gens.begin(), p.gens.end());
  auto adjoin = [&](const char* base) {
    std::string n = fresh_name(base, taken);
    taken.insert(n);
    out.gens.push_back(n);
    return static_cast<std::int32_t>(out.gens.size() - 1);
  };
  const std::int32_t a = adjoin("a"), b = adjoin("b"), c = adjoin("c");
  const Letter pa = pos(a), pb = pos(b), pc = pos(c);

  auto equate = [&](Word lhs, const Word& rhs) {
    lhs.append(rhs.inverse());
    out.relators.push_back(std::move(lhs));
  };
  auto sandwich = [&](std::int32_t g, std::int64_t e, const Word& mid) {
    Word s = power_word(g, -e);
    s.append(mid);
    s.append(power_word(g, e));
    return s;
  };

  equate(sandwich(a, 1, letter_word(pb)),
         Word{{pc.inverse(), pb.inverse(), pc, pb, pc}});
  equate(sandwich(a, 2, Word{{pb.inverse(), pa, pb}}),
         Word{{pc.inverse(), pc.inverse(), pb.inverse(), pc, pb, pc, pc}});
  equate(sandwich(a, 3, commutator(w, letter_word(pb))),
         sandwich(c, 3, letter_word(pb)));
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    Word mid{{pos(static_cast<std::int32_t>(i)), pb}};
    const auto e = static_cast<std::int64_t>(3 + (i + 1));
    equate(sandwich(a, e, mid), sandwich(c, e, letter_word(pb)));
  }

  out.check();
  return out;
}

// The two generators of a non-trivial Gordon output: b and c a^-1. Rejects
// presentations that do not carry the Gordon relator frame.
inline std::pair<Word, Word> gordon_rank2_generators(
    const GroupPresentation& g) {
  const std::size_t n = g.gens.size();
  if (n < 3) throw std::invalid_argument("not a Gordon presentation");
  const std::size_t nx = n - 3;
  if (g.relators.size() < nx + 3)
    throw std::invalid_argument("not a Gordon presentation");
  const std::int32_t a = static_cast<std::int32_t>(nx);
  const Letter pa = pos(a), pb = pos(a + 1), pc = pos(a + 2);

  // Check the first two adjoined relators exactly and the frame of the rest.
  const std::size_t base = g.relators.size() - nx - 3;
  const Word rel1 = concat(Word{{pa.inverse(), pb, pa}},
                           Word{{pc.inverse(), pb.inverse(), pc, pb, pc}}
                               .inverse());
  const Word rel2 =
      concat(Word{{pa.inverse(), pa.inverse(), pb.inverse(), pa, pb, pa, pa}},
             Word{{pc.inverse(), pc.inverse(), pb.inverse(), pc, pb, pc, pc}}
                 .inverse());
  if (g.relators[base] != rel1 || g.relators[base + 1] != rel2)
    throw std::invalid_argument("not a Gordon presentation");
  for (std::size_t i = 0; i < nx; ++i) {
    const auto e = static_cast<std::int64_t>(3 + (i + 1));
    Word expect = power_word(a, -e);
    expect.append(pos(static_cast<std::int32_t>(i)));
    expect.append(pb);
    expect.append(power_word(a, e));
    expect.append(concat(power_word(a + 2, -e),
                         concat(letter_word(pb), power_word(a + 2, e)))
                      .inverse());
    if (g.relators[base + 3 + i] != expect)
      throw std::invalid_argument("not a Gordon presentation");
  }

  return {letter_word(pb), Word{{pc, pa.inverse()}}};
}

}  // namespace fpg
