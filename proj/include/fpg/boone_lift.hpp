#pragma once

// Lifting a semigroup derivation  h q_1 w h => q  to a triviality
// certificate for beta(w) in the group.
//
// The only primitive rewriting happens on the semigroup word itself, held in
// a RelatorRewriter that tracks the invariant
//
//     start  ==  (product of emitted factors) * current    (freely)
//
// so transforming sigma into X sigma' Y yields a checked proof of the
// rewrite sigma => X sigma' Y. One derivation step lifts as:
//
//   forward step at context (A, B):
//     A F q_a G B  =>  [x^-2 r_i x] A H q_b K B [x^{M(KB)} r_i^-1 x^{-N(GB)}]
//   backward step:
//     A H q_b K B  =>  [x^-1 r_i^-1 x^2] A F q_a G B [x^{N(GB)} r_i x^{-M(KB)}]
//
// with N(p) = 2^{p+1} - 2 and M(p) = 2^p - 1 counting the x-debris created
// by carrying x-powers across positive s-words (each crossing doubles). The
// steps compose into  sigma_0 => X* q Y*  where X*, Y* are words in x and
// the r_i only. Since t and k commute with exactly those letters, the
// commutator beta = [sigma^-1 t sigma, k] collapses: conjugate t through X*,
// cross k through Y*, fire the final relator once, and the debris cancels
// freely. All of that bookkeeping is done with certificate combinators, so
// the four occurrences of sigma inside beta never get rewritten in place.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/boone.hpp"
#include "fpg/certificate.hpp"
#include "fpg/post.hpp"

namespace fpg {

class RelatorRewriter {
 public:
  RelatorRewriter(const BooneGroup& b, Word start)
      : b_(b), start_(start), cur_(std::move(start.letters)) {}

  const std::vector<Letter>& cur() const { return cur_; }
  Word cur_word() const { return Word{cur_}; }
  std::vector<CertEntry> take_factors() { return std::move(factors_); }

  // Replace left side of relator `rel` by its right side at `pos`.
  void apply_lr(std::uint32_t rel, std::size_t pos) {
    const RelatorSplit& sp = b_.splits.at(rel);
    expect(sp.lhs, pos, "apply_lr");
    emit(rel, +1, pos);
    splice(pos, sp.lhs.raw_length(), sp.rhs);
  }
  // Replace right side by left side at `pos`.
  void apply_rl(std::uint32_t rel, std::size_t pos) {
    const RelatorSplit& sp = b_.splits.at(rel);
    expect(sp.rhs, pos, "apply_rl");
    emit(rel, -1, pos);
    splice(pos, sp.rhs.raw_length(), sp.lhs);
  }
  // Insert the freely-trivial pair [l, l^-1] at `pos`.
  void insert_pair(std::size_t pos, Letter l) {
    if (pos > cur_.size()) throw std::logic_error("insert_pair: bad position");
    cur_.insert(cur_.begin() + static_cast<std::ptrdiff_t>(pos),
                {l, l.inverse()});
  }
  // Remove an adjacent inverse pair at `pos`.
  void cancel_pair(std::size_t pos) {
    if (pos + 1 >= cur_.size() || cur_[pos + 1] != cur_[pos].inverse())
      throw std::logic_error("cancel_pair: no inverse pair at position");
    cur_.erase(cur_.begin() + static_cast<std::ptrdiff_t>(pos),
               cur_.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
  }

  // Check the factor/current invariant against the start word (test hook;
  // quadratic, use on small words only).
  bool invariant_holds() const {
    Word prod = cert_product(b_.p, factors_);
    prod.append(Word{cur_});
    return freely_equal(prod, start_);
  }

 private:
  void expect(const Word& pat, std::size_t pos, const char* what) const {
    if (pos + pat.raw_length() > cur_.size())
      throw std::logic_error(std::string(what) + ": pattern overruns word");
    for (std::size_t i = 0; i < pat.raw_length(); ++i)
      if (cur_[pos + i] != pat.letters[i])
        throw std::logic_error(std::string(what) + ": pattern mismatch at " +
                               std::to_string(pos + i));
  }
  void emit(std::uint32_t rel, std::int32_t sign, std::size_t prefix_len) {
    factors_.push_back(
        {rel, sign,
         Word{std::vector<Letter>(cur_.begin(),
                                  cur_.begin() +
                                      static_cast<std::ptrdiff_t>(prefix_len))}});
  }
  void splice(std::size_t pos, std::size_t len, const Word& repl) {
    cur_.erase(cur_.begin() + static_cast<std::ptrdiff_t>(pos),
               cur_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    cur_.insert(cur_.begin() + static_cast<std::ptrdiff_t>(pos),
                repl.letters.begin(), repl.letters.end());
  }

  const BooneGroup& b_;
  Word start_;
  std::vector<Letter> cur_;
  std::vector<CertEntry> factors_;
};

namespace lift_detail {

inline std::uint64_t pow_n(std::size_t p) {  // N(p) = 2^{p+1} - 2
  if (p > 30) throw std::length_error("flank too long to lift");
  return (1ull << (p + 1)) - 2;
}
inline std::uint64_t pow_m(std::size_t p) {  // M(p) = 2^p - 1
  if (p > 30) throw std::length_error("flank too long to lift");
  return (1ull << p) - 1;
}

// One x (either sign) at `pos` crosses the s-letter at pos+1 rightward:
// [x^e, s] -> [s, x^e, x^e].
inline void cross_right(const BooneGroup& b, RelatorRewriter& rw,
                        std::size_t pos) {
  const Letter xl = rw.cur().at(pos);
  const Letter sl = rw.cur().at(pos + 1);
  const std::uint32_t rel =
      b.idx_doubling(static_cast<std::uint32_t>(sl.gen));
  if (xl.sign > 0) {
    rw.apply_lr(rel, pos);
  } else {
    rw.insert_pair(pos + 2, Letter{b.x, +1});
    rw.insert_pair(pos + 3, Letter{b.x, +1});
    rw.apply_rl(rel, pos + 1);
    rw.cancel_pair(pos);
  }
}

// [s, x^e, x^e] at pos -> [x^e, s].
inline void cross_left(const BooneGroup& b, RelatorRewriter& rw,
                       std::size_t pos) {
  const Letter sl = rw.cur().at(pos);
  const Letter xl = rw.cur().at(pos + 1);
  const std::uint32_t rel =
      b.idx_doubling(static_cast<std::uint32_t>(sl.gen));
  if (xl.sign > 0) {
    rw.apply_rl(rel, pos);
  } else {
    rw.insert_pair(pos, neg(b.x));
    rw.apply_lr(rel, pos + 1);
    rw.cancel_pair(pos + 3);
    rw.cancel_pair(pos + 2);
  }
}

// Block x^{+-m} at pos, letter at pos+m: -> [letter, x^{+-2m}].
inline void transport_right(const BooneGroup& b, RelatorRewriter& rw,
                            std::size_t pos, std::uint64_t m) {
  for (std::uint64_t j = m; j-- > 0;)
    cross_right(b, rw, pos + static_cast<std::size_t>(j));
}

// Letter at pos, block x^{+-m} after it (m even): -> [x^{+-m/2}, letter].
inline void transport_left(const BooneGroup& b, RelatorRewriter& rw,
                           std::size_t pos, std::uint64_t m) {
  if (m % 2 != 0) throw std::logic_error("transport_left: odd block");
  for (std::uint64_t j = 0; j < m / 2; ++j)
    cross_left(b, rw, pos + static_cast<std::size_t>(j));
}

// [P, x^{N(p)}] at pos (P = p s-letters) -> U(P) = (x s_1)...(x s_p).
inline void u_decorate(const BooneGroup& b, RelatorRewriter& rw,
                       std::size_t pos, std::size_t p) {
  if (p == 0) return;
  transport_left(b, rw, pos + p - 1, pow_n(p));
  u_decorate(b, rw, pos, p - 1);
}

// U(P) at pos -> [P, x^{N(p)}].
inline void u_undecorate(const BooneGroup& b, RelatorRewriter& rw,
                         std::size_t pos, std::size_t p) {
  if (p == 0) return;
  u_undecorate(b, rw, pos, p - 1);
  transport_right(b, rw, pos + p - 1, pow_m(p));  // N(p-1)+1 = M(p)
}

// [P, x^{M(p)}] at pos -> V(P) = (s_1 x)...(s_p x).
inline void v_decorate(const BooneGroup& b, RelatorRewriter& rw,
                       std::size_t pos, std::size_t p) {
  if (p == 0) return;
  transport_left(b, rw, pos + p - 1, pow_m(p) - 1);
  v_decorate(b, rw, pos, p - 1);
}

// V(P) at pos -> [P, x^{M(p)}].
inline void v_undecorate(const BooneGroup& b, RelatorRewriter& rw,
                         std::size_t pos, std::size_t p) {
  if (p == 0) return;
  v_undecorate(b, rw, pos, p - 1);
  transport_right(b, rw, pos + p - 1, pow_m(p - 1));
}

// [x, a, r_i] with r_i at pos_r  ->  [r_i, a, x].
inline void r_cross_left_u(const BooneGroup& b, RelatorRewriter& rw,
                           std::size_t pos_r, std::uint32_t i) {
  const Letter a = rw.cur().at(pos_r - 1);
  rw.insert_pair(pos_r - 2, pos(b.gen_r(i)));
  rw.apply_lr(b.idx_carry(i, static_cast<std::uint32_t>(a.gen)), pos_r - 1);
}

// [r_i^-1, x, a]  with r_i^-1 at pos_r  ->  [a, x, r_i^-1].
inline void r_inv_cross_right_u(const BooneGroup& b, RelatorRewriter& rw,
                                std::size_t pos_r, std::uint32_t i) {
  const Letter a = rw.cur().at(pos_r + 2);
  rw.insert_pair(pos_r + 3, pos(b.gen_r(i)));
  rw.apply_lr(b.idx_carry(i, static_cast<std::uint32_t>(a.gen)), pos_r);
}

// [a, x, r_i^-1] with r_i^-1 at pos_r  ->  [r_i^-1, x, a].
inline void r_inv_cross_left_v(const BooneGroup& b, RelatorRewriter& rw,
                               std::size_t pos_r, std::uint32_t i) {
  const Letter a = rw.cur().at(pos_r - 2);
  rw.apply_rl(b.idx_carry(i, static_cast<std::uint32_t>(a.gen)), pos_r - 2);
  rw.cancel_pair(pos_r + 1);
}

// [r_i, a, x] with r_i at pos_r  ->  [x, a, r_i].
inline void r_cross_right_v(const BooneGroup& b, RelatorRewriter& rw,
                            std::size_t pos_r, std::uint32_t i) {
  const Letter a = rw.cur().at(pos_r + 1);
  rw.apply_rl(b.idx_carry(i, static_cast<std::uint32_t>(a.gen)), pos_r + 1);
  rw.cancel_pair(pos_r);
}

}  // namespace lift_detail

struct StepLift {
  std::vector<CertEntry> factors;  // proof of  sigma => x_part next y_part
  Word x_part;
  Word next_sigma;
  Word y_part;
};

// Lift one derivation step applied to `word`.
inline StepLift lift_derivation_step(const BooneGroup& b, const SgWord& word,
                                     const DerivStep& st) {
  namespace ld = lift_detail;
  const SemigroupPresentation& sg = b.post.sg;
  auto applied = apply_derivation_step(sg, word, st);
  if (!applied)
    throw std::invalid_argument("derivation step does not apply to word");

  const SemigroupRelation& rel = sg.relations.at(st.rel);
  const SpecialForm lf = special_form(sg, rel.lhs);
  const SpecialForm rf = special_form(sg, rel.rhs);
  const bool fwd = st.dir == StepDir::LR;
  const std::size_t match_len = fwd ? rel.lhs.size() : rel.rhs.size();

  // Context flanks A (prefix) and B (suffix) around the replaced span.
  const std::size_t al = st.offset;
  const std::size_t bl = word.size() - al - match_len;
  for (std::size_t j = 0; j < al; ++j)
    if (sg.is_q(word[j]))
      throw std::logic_error("left context contains a q-letter");
  for (std::size_t j = word.size() - bl; j < word.size(); ++j)
    if (sg.is_q(word[j]))
      throw std::logic_error("right context contains a q-letter");

  const std::size_t fl = lf.f.size(), gl = lf.g.size();
  const std::size_t hl = rf.f.size(), kl = rf.g.size();
  const std::uint32_t i = st.rel;
  const Letter R = pos(b.gen_r(i));
  const Letter X = pos(b.x);

  RelatorRewriter rw(b, group_word_of(b, word));
  StepLift out;

  if (fwd) {
    // sigma = A F q_a G B.
    // Seed x^-2 x^2, carry the x^2 over A (doubling), then dress A as U(A).
    rw.insert_pair(0, X.inverse());
    rw.insert_pair(1, X.inverse());
    {
      std::uint64_t pw = 2;
      std::size_t posx = 2;
      for (std::size_t j = 0; j < al; ++j) {
        ld::transport_right(b, rw, posx, pw);
        posx += 1;
        pw *= 2;
      }
      if (al > 0) ld::u_decorate(b, rw, 2, al);  // leaves x^2 beside F
    }
    // Dress G as U(G) against freshly inserted debris.
    const std::size_t posG = 5 + 2 * al + fl;
    for (std::uint64_t j = 0; j < ld::pow_n(gl); ++j)
      rw.insert_pair(posG + gl + static_cast<std::size_t>(j), X);
    ld::u_decorate(b, rw, posG, gl);
    // Bracket with r_i and fire the main relator.
    const std::size_t posL = 2 + 2 * al;
    rw.insert_pair(posL, R);
    rw.insert_pair(posL + 5 + fl + 2 * gl, R);
    rw.apply_lr(b.idx_main(i), posL + 1);
    // Carry r_i leftward across U(A), leaving V(A).
    {
      std::size_t pr = posL;
      for (std::size_t j = 0; j < al; ++j) {
        ld::r_cross_left_u(b, rw, pr, i);
        pr -= 2;
      }
    }
    // Push the trailing x^{-N(G)} across B, dress B as U(B), then carry
    // r_i^-1 rightward across it, leaving V(B).
    const std::size_t posT = 6 + 2 * al + hl + 2 * kl;
    {
      std::uint64_t pw = ld::pow_n(gl);
      std::size_t posx = posT;
      for (std::size_t j = 0; j < bl; ++j) {
        ld::transport_right(b, rw, posx, pw);
        posx += 1;
        pw *= 2;
      }
      for (std::uint64_t j = 0; j < ld::pow_n(bl); ++j)
        rw.insert_pair(posT + bl + static_cast<std::size_t>(j), X);
      ld::u_decorate(b, rw, posT, bl);
      std::size_t pr = posT - 1;
      for (std::size_t j = 0; j < bl; ++j) {
        ld::r_inv_cross_right_u(b, rw, pr, i);
        pr += 2;
      }
    }
    // Undress V(A) back to A, pulling the leftover x-power out to the left.
    ld::v_undecorate(b, rw, 3, al);
    {
      std::uint64_t m = 1ull << al;  // M(al) + the single x from the carry
      for (std::size_t j = al; j-- > 0;) {
        ld::transport_left(b, rw, 3 + j, m);
        m /= 2;
      }
    }
    // Undress V(K B) into K B x^{M(KB)}.
    ld::v_undecorate(b, rw, 5 + al + hl, kl + bl);

    out.x_part = Word{{X.inverse(), X.inverse(), R, X}};
    Word y;
    for (std::uint64_t j = 0; j < ld::pow_m(kl + bl); ++j) y.append(X);
    y.append(R.inverse());
    for (std::uint64_t j = 0; j < ld::pow_n(gl + bl); ++j)
      y.append(X.inverse());
    out.y_part = std::move(y);
  } else {
    // sigma = A H q_b K B; rewrite backwards.
    rw.insert_pair(0, X.inverse());
    {
      std::uint64_t pw = 1;
      std::size_t posx = 1;
      for (std::size_t j = 0; j < al; ++j) {
        ld::transport_right(b, rw, posx, pw);
        posx += 1;
        pw *= 2;
      }
      if (al > 0) ld::v_decorate(b, rw, 1, al);  // leaves a single x beside H
    }
    const std::size_t posK = 3 + 2 * al + hl;
    for (std::uint64_t j = 0; j < ld::pow_m(kl); ++j)
      rw.insert_pair(posK + kl + static_cast<std::size_t>(j), X);
    ld::v_decorate(b, rw, posK, kl);
    rw.apply_rl(b.idx_main(i), 1 + 2 * al);
    // Carry r_i^-1 leftward across V(A), leaving U(A).
    {
      std::size_t pr = 1 + 2 * al;
      for (std::size_t j = 0; j < al; ++j) {
        ld::r_inv_cross_left_v(b, rw, pr, i);
        pr -= 2;
      }
    }
    // Trailing x^{-M(K)} across B, dress B as V(B), carry r_i rightward.
    const std::size_t posT = 6 + 2 * al + fl + 2 * gl;
    {
      std::uint64_t pw = ld::pow_m(kl);
      std::size_t posx = posT;
      for (std::size_t j = 0; j < bl; ++j) {
        ld::transport_right(b, rw, posx, pw);
        posx += 1;
        pw *= 2;
      }
      for (std::uint64_t j = 0; j < ld::pow_m(bl); ++j)
        rw.insert_pair(posT + bl + static_cast<std::size_t>(j), X);
      ld::v_decorate(b, rw, posT, bl);
      std::size_t pr = posT - 1;
      for (std::size_t j = 0; j < bl; ++j) {
        ld::r_cross_right_v(b, rw, pr, i);
        pr += 2;
      }
    }
    // Undress U(A), pulling x^2 out to the left.
    ld::u_undecorate(b, rw, 2, al);
    {
      std::uint64_t m = 1ull << (al + 1);  // N(al) + the x^2 from the firing
      for (std::size_t j = al; j-- > 0;) {
        ld::transport_left(b, rw, 2 + j, m);
        m /= 2;
      }
    }
    // Undress U(G B) into G B x^{N(GB)}.
    ld::u_undecorate(b, rw, 5 + al + fl, gl + bl);

    out.x_part = Word{{X.inverse(), R.inverse(), X, X}};
    Word y;
    for (std::uint64_t j = 0; j < ld::pow_n(gl + bl); ++j) y.append(X);
    y.append(R);
    for (std::uint64_t j = 0; j < ld::pow_m(kl + bl); ++j)
      y.append(X.inverse());
    out.y_part = std::move(y);
  }

  out.next_sigma = group_word_of(b, *applied);
  Word expected = out.x_part;
  expected.append(out.next_sigma);
  expected.append(out.y_part);
  if (rw.cur_word() != expected)
    throw std::logic_error("step lift produced an unexpected word");
  out.factors = rw.take_factors();
  return out;
}

namespace lift_detail {

// Relator index for the commutation pair [g, c]: g is t or k, c is x or r_i.
inline std::uint32_t comm_rel(const BooneGroup& b, std::int32_t g,
                              std::int32_t c) {
  const bool is_t = g == b.t;
  if (!is_t && g != b.k) throw std::logic_error("comm_rel: not t or k");
  if (c == b.x) return is_t ? b.idx_tx() : b.idx_kx();
  const std::int32_t i = c - b.r0;
  if (i < 0 || i >= static_cast<std::int32_t>(b.num_rel))
    throw std::logic_error("comm_rel: letter does not commute");
  return is_t ? b.idx_tr(static_cast<std::uint32_t>(i))
              : b.idx_kr(static_cast<std::uint32_t>(i));
}

// cert( l^-1 g l => g ) for a signed junk letter l and signed g in {t,k}^+-.
inline std::vector<CertEntry> comm_conj_cert(const BooneGroup& b, Letter g,
                                             Letter l) {
  const std::uint32_t rel = comm_rel(b, g.gen, l.gen);
  const Letter c = pos(l.gen);
  if (g.sign > 0 && l.sign > 0)
    return cert_axiom(rel, +1, letter_word(c.inverse()));
  if (g.sign > 0 && l.sign < 0) return cert_axiom(rel, -1);
  if (g.sign < 0 && l.sign > 0)
    return cert_axiom(rel, -1, Word{{c.inverse(), g}});
  return cert_axiom(rel, +1, letter_word(g));
}

// cert( l g => g l ) for positive g in {t, k}.
inline std::vector<CertEntry> comm_swap_cert(const BooneGroup& b, Letter g,
                                             Letter l) {
  const std::uint32_t rel = comm_rel(b, g.gen, l.gen);
  if (l.sign > 0) return cert_axiom(rel, -1);
  return cert_axiom(rel, +1, letter_word(l));
}

}  // namespace lift_detail

// cert( W^-1 g W => g ): conjugation by a word of commuting letters.
inline std::vector<CertEntry> comm_tower_cert(const BooneGroup& b, Letter g,
                                              const Word& w) {
  std::vector<CertEntry> out;
  Word suffix;
  for (std::size_t j = w.letters.size(); j-- > 0;) {
    auto step = cert_context(suffix.inverse(),
                             lift_detail::comm_conj_cert(b, g, w.letters[j]));
    out = cert_trans(std::move(step), out);
    suffix = concat(letter_word(w.letters[j]), suffix);
  }
  return out;
}

// cert( W g => g W ) for positive g commuting with every letter of W.
inline std::vector<CertEntry> comm_pass_cert(const BooneGroup& b, Letter g,
                                             const Word& w) {
  std::vector<CertEntry> out;
  for (std::size_t j = w.letters.size(); j-- > 0;) {
    Word prefix{std::vector<Letter>(w.letters.begin(),
                                    w.letters.begin() +
                                        static_cast<std::ptrdiff_t>(j))};
    out = cert_trans(
        std::move(out),
        cert_context(prefix, lift_detail::comm_swap_cert(b, g, w.letters[j])));
  }
  return out;
}

// Lift a full derivation  h q_1 w h => q  to a verified certificate for
// beta(w). Throws if the derivation does not replay or does not end at q.
inline TrivialityCertificate certificate_from_derivation(const BooneGroup& b,
                                                         const Derivation& d) {
  const SemigroupPresentation& sg = b.post.sg;
  if (d.end != SgWord{b.post.q})
    throw std::invalid_argument("derivation must end at the letter q");

  // Replay, lifting each step; fold the proofs right-to-left into
  // cert( sigma_0 => X* q Y* ).
  std::vector<SgWord> words{d.start};
  for (const DerivStep& st : d.steps) {
    auto next = apply_derivation_step(sg, words.back(), st);
    if (!next) throw std::invalid_argument("derivation does not replay");
    words.push_back(std::move(*next));
  }
  if (words.back() != d.end)
    throw std::invalid_argument("derivation does not reach its stated end");

  std::vector<CertEntry> fold;
  Word xacc, yacc;
  for (std::size_t j = d.steps.size(); j-- > 0;) {
    StepLift sl = lift_derivation_step(b, words[j], d.steps[j]);
    fold = cert_trans(std::move(sl.factors),
                      cert_context(sl.x_part, std::move(fold)));
    xacc = concat(sl.x_part, xacc);
    yacc = concat(yacc, sl.y_part);
  }

  const Word sig = group_word_of(b, d.start);
  const Word Q = letter_word(pos(b.gen_q_base()));
  const Word tw = letter_word(pos(b.t)), kw = letter_word(pos(b.k));
  const Word u = concat({sig.inverse(), tw, sig});
  const Word V = concat({yacc.inverse(), Q.inverse(), tw, Q, yacc});

  // u => V, through sigma => Z := X* q Y* on both occurrences, then
  // conjugating t across X*.
  auto e0inv = cert_inv_word(sig, fold);
  auto c1 = cert_context(concat(sig.inverse(), tw), fold);
  auto c3 = cert_context(concat(yacc.inverse(), Q.inverse()),
                         comm_tower_cert(b, pos(b.t), xacc));
  auto cu = cert_trans(cert_trans(std::move(c1), e0inv), c3);

  // beta = u^-1 k^-1 u k  =>  V^-1 k^-1 V k  =>  1.
  auto d1 = cert_inv_word(u, cu);
  auto d2 = cert_context(concat(V.inverse(), kw.inverse()), cu);
  const Word conj_tq =
      concat({Q.inverse(), tw.inverse(), Q, kw.inverse(), Q.inverse(), tw, Q});
  auto d3a = cert_context(concat({yacc.inverse(), Q.inverse(), tw.inverse(), Q}),
                          comm_tower_cert(b, neg(b.k), yacc.inverse()));
  auto d3b = cert_context(concat(yacc.inverse(), conj_tq),
                          comm_pass_cert(b, pos(b.k), yacc));
  auto d3c = cert_context(yacc.inverse(), cert_axiom(b.idx_final(), +1));

  auto all = cert_trans(std::move(d1), std::move(d2));
  all = cert_trans(std::move(all), std::move(d3a));
  all = cert_trans(std::move(all), std::move(d3b));
  all = cert_trans(std::move(all), std::move(d3c));

  TrivialityCertificate cert{beta_word(b, d.start), std::move(all)};
  const CertCheck chk = check_certificate(b.p, cert);
  if (!chk.ok)
    throw std::logic_error("lifted certificate failed verification: " +
                           chk.reason);
  return cert;
}

}  // namespace fpg
