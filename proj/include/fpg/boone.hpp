#pragma once

// The group built from a special semigroup, following the classical
// Boone-Britton construction. Generators, in order: one per s-letter, one
// per q-letter, one r_i per semigroup relation, then x, t, k. Relator
// families (each stored as a left/right split; the relator is
// left * right^{-1}):
//
//   doubling:  x s_b            = s_b x x          (each s-letter)
//   carry:     r_i^-1 x s_b r_i = s_b x            (each relation, s-letter)
//   main:      r_i^-1 x^2 F_i q_{a_i} U(G_i) r_i = x H_i q_{b_i} V(K_i)
//   t-x:       t x = x t        t-r:  t r_i = r_i t
//   k-x:       k x = x k        k-r:  k r_i = r_i k
//   final:     q^-1 t^-1 q k^-1 q^-1 t q k = 1
//
// where relation i reads F_i q_{a_i} G_i = H_i q_{b_i} K_i, U(w) replaces
// each s-letter s with (x s), and V(w) replaces each with (s x). The
// x-doubling bookkeeping is what ties group-level conjugation to positive
// semigroup rewriting: a positive word P satisfies
// P^{-1} x P = x^{2^{|P|}}, and the decorated forms satisfy
// U(P) = P x^{2^{|P|+1}-2} and V(P) = P x^{2^{|P|}-1} modulo the doubling
// relators. For a word w in the semigroup,
//
//   beta(w) = [ Sigma(w)^{-1} t Sigma(w), k ],   Sigma(w) = h q_1 w h,
//
// is trivial in the group exactly when h q_1 w h derives q in the semigroup,
// i.e. exactly when the machine halts on w.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/post.hpp"
#include "fpg/presentation.hpp"
#include "fpg/schema.hpp"
#include "fpg/word.hpp"

namespace fpg {

struct RelatorSplit {
  Word lhs;
  Word rhs;
};

struct BooneGroup {
  GroupPresentation p;
  PostEncoding post;  // owns the semigroup presentation in post.sg
  std::vector<RelatorSplit> splits;

  // Generator index layout. Semigroup letter u (combined index) maps to
  // group generator u; then r-block, then x, t, k.
  std::uint32_t num_s = 0;   // s-letters
  std::uint32_t num_q = 0;   // q-letters
  std::uint32_t num_rel = 0; // semigroup relations (= r generators)
  std::int32_t r0 = 0;       // first r generator
  std::int32_t x = 0, t = 0, k = 0;

  std::int32_t gen_of_letter(std::uint32_t letter) const {
    return static_cast<std::int32_t>(letter);
  }
  std::int32_t gen_r(std::uint32_t i) const {
    return r0 + static_cast<std::int32_t>(i);
  }
  std::int32_t gen_q_base() const {  // generator of the target letter q
    return gen_of_letter(post.q);
  }

  // Relator family indices, mirroring construction order.
  std::uint32_t idx_doubling(std::uint32_t s) const { return s; }
  std::uint32_t idx_carry(std::uint32_t i, std::uint32_t s) const {
    return num_s + i * num_s + s;
  }
  std::uint32_t idx_main(std::uint32_t i) const {
    return num_s + num_rel * num_s + i;
  }
  std::uint32_t idx_tx() const { return num_s * (1 + num_rel) + num_rel; }
  std::uint32_t idx_tr(std::uint32_t i) const { return idx_tx() + 1 + i; }
  std::uint32_t idx_kx() const { return idx_tx() + 1 + num_rel; }
  std::uint32_t idx_kr(std::uint32_t i) const { return idx_kx() + 1 + i; }
  std::uint32_t idx_final() const { return idx_kx() + 1 + num_rel; }
};

inline BooneGroup boone_encode_semigroup(PostEncoding enc,
                                         const std::string& name) {
  BooneGroup b;
  b.post = std::move(enc);
  const SemigroupPresentation& sg = b.post.sg;
  b.num_s = static_cast<std::uint32_t>(sg.num_s());
  b.num_q = static_cast<std::uint32_t>(sg.num_q());
  b.num_rel = static_cast<std::uint32_t>(sg.relations.size());

  GroupPresentation& p = b.p;
  p.name = name;
  std::set<std::string> taken;
  auto push_gen = [&](std::string base) {
    std::string n = fresh_name(std::move(base), taken);
    taken.insert(n);
    p.gens.push_back(n);
  };
  for (const auto& n : sg.s_letters) push_gen(n);
  for (const auto& n : sg.q_letters) push_gen(n);
  b.r0 = static_cast<std::int32_t>(p.gens.size());
  for (std::uint32_t i = 0; i < b.num_rel; ++i)
    push_gen("r" + std::to_string(i + 1));
  b.x = static_cast<std::int32_t>(p.gens.size());
  push_gen("x");
  b.t = static_cast<std::int32_t>(p.gens.size());
  push_gen("t");
  b.k = static_cast<std::int32_t>(p.gens.size());
  push_gen("k");

  auto add = [&](Word lhs, Word rhs) {
    Word rel = lhs;
    rel.append(rhs.inverse());
    p.relators.push_back(std::move(rel));
    b.splits.push_back({std::move(lhs), std::move(rhs)});
  };
  const Letter X = pos(b.x), T = pos(b.t), K = pos(b.k);

  // doubling: x s = s x x
  for (std::uint32_t s = 0; s < b.num_s; ++s) {
    const Letter S = pos(b.gen_of_letter(s));
    add(Word{{X, S}}, Word{{S, X, X}});
  }
  // carry: r^-1 x s r = s x
  for (std::uint32_t i = 0; i < b.num_rel; ++i) {
    const Letter R = pos(b.gen_r(i));
    for (std::uint32_t s = 0; s < b.num_s; ++s) {
      const Letter S = pos(b.gen_of_letter(s));
      add(Word{{R.inverse(), X, S, R}}, Word{{S, X}});
    }
  }
  // main: r^-1 x^2 F q_a U(G) r = x H q_b V(K)
  for (std::uint32_t i = 0; i < b.num_rel; ++i) {
    const SemigroupRelation& rel = sg.relations[i];
    const SpecialForm L = special_form(sg, rel.lhs);
    const SpecialForm Rf = special_form(sg, rel.rhs);
    const Letter R = pos(b.gen_r(i));
    Word lhs{{R.inverse(), X, X}};
    for (std::uint32_t s : L.f) lhs.append(pos(b.gen_of_letter(s)));
    lhs.append(pos(b.gen_of_letter(L.q)));
    for (std::uint32_t s : L.g) {
      lhs.append(X);
      lhs.append(pos(b.gen_of_letter(s)));
    }
    lhs.append(R);
    Word rhs{{X}};
    for (std::uint32_t s : Rf.f) rhs.append(pos(b.gen_of_letter(s)));
    rhs.append(pos(b.gen_of_letter(Rf.q)));
    for (std::uint32_t s : Rf.g) {
      rhs.append(pos(b.gen_of_letter(s)));
      rhs.append(X);
    }
    add(std::move(lhs), std::move(rhs));
  }
  // t and k commute with x and every r.
  add(Word{{T, X}}, Word{{X, T}});
  for (std::uint32_t i = 0; i < b.num_rel; ++i) {
    const Letter R = pos(b.gen_r(i));
    add(Word{{T, R}}, Word{{R, T}});
  }
  add(Word{{K, X}}, Word{{X, K}});
  for (std::uint32_t i = 0; i < b.num_rel; ++i) {
    const Letter R = pos(b.gen_r(i));
    add(Word{{K, R}}, Word{{R, K}});
  }
  // final: [q^-1 t q, k] = 1
  const Letter Q = pos(b.gen_q_base());
  add(Word{{Q.inverse(), T.inverse(), Q, K.inverse(), Q.inverse(), T, Q, K}},
      Word{});

  p.check();
  return b;
}

inline BooneGroup boone_encode(const TuringMachine& m) {
  PostEncoding enc = post_encode(m);
  return boone_encode_semigroup(std::move(enc), "B(" + m.name + ")");
}

// A positive semigroup word as a group word, letter for letter.
inline Word group_word_of(const BooneGroup& b, const SgWord& w) {
  Word out;
  out.letters.reserve(w.size());
  for (std::uint32_t u : w) {
    if (u >= b.num_s + b.num_q)
      throw std::out_of_range("semigroup letter out of range");
    out.append(pos(b.gen_of_letter(u)));
  }
  return out;
}

// beta for an arbitrary special word: [ w^{-1} t w, k ]. Raw length
// 4 |w| + 4; never freely reducible for positive w.
inline Word beta_word(const BooneGroup& b, const SgWord& w) {
  const Word s = group_word_of(b, w);
  Word u = s.inverse();
  u.append(pos(b.t));
  u.append(s);
  return commutator(u, letter_word(pos(b.k)));
}

// beta for a machine input: Sigma = h q_1 input h.
inline Word beta_for_input(const BooneGroup& b,
                           const std::vector<std::uint32_t>& input) {
  return beta_word(b, input_word(b.post, input));
}

}  // namespace fpg
