#pragma once

// Encoding of a Turing machine T as a special semigroup Gamma(T), after
// Post: letters split into s-letters {h, s_0..s_M} (h marks the tape ends,
// s_0 is the blank) and q-letters {q, qhat, q_1..q_N} (machine states plus
// two cleanup phases). A configuration with tape L . R and state q_i becomes
// the word  h L q_i R h,  and the defining relations simulate one machine
// step each, plus a cleanup phase that erases a halted tape. The contract:
// h q_1 w h  derives to  q  exactly when the machine halts on input w.
//
// Derivations are stored as explicit step lists (relation index, direction,
// offset) so they can be replayed and checked independently.

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpg/machine.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

enum class StepDir { LR, RL };

struct DerivStep {
  std::uint32_t rel = 0;
  StepDir dir = StepDir::LR;
  std::uint32_t offset = 0;

  friend bool operator==(const DerivStep&, const DerivStep&) = default;
};

struct Derivation {
  SgWord start;
  SgWord end;
  std::vector<DerivStep> steps;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// The encoding result: the semigroup plus letter/relation lookup tables.
struct PostEncoding {
  SemigroupPresentation sg;

  std::uint32_t h = 0;     // leftmost s-letter
  std::uint32_t q = 0;     // final cleanup target (combined index)
  std::uint32_t qhat = 0;  // halt sweep letter (combined index)
  std::vector<std::uint32_t> s_of_sym;    // machine symbol -> combined index
  std::vector<std::uint32_t> q_of_state;  // machine state -> combined index

  // Relation index lookup. quad_rel_base[t] is the first relation of
  // quadruple t's block (write quads have 1 relation; move quads have one per
  // alphabet symbol plus the end-marker variant).
  std::vector<std::uint32_t> quad_rel_base;
  std::uint32_t cleanup_base = 0;  // q_halt absorption block start
};

inline PostEncoding post_encode(const TuringMachine& m) {
  validate(m);
  PostEncoding enc;
  SemigroupPresentation& sg = enc.sg;
  sg.name = "Gamma(" + m.name + ")";

  std::set<std::string> taken{"h", "q", "qhat"};
  sg.s_letters.push_back("h");
  enc.h = 0;
  enc.s_of_sym.resize(m.alphabet.size());
  for (std::size_t j = 0; j < m.alphabet.size(); ++j) {
    std::string n = fresh_name(m.alphabet[j], taken);
    taken.insert(n);
    enc.s_of_sym[j] = static_cast<std::uint32_t>(sg.s_letters.size());
    sg.s_letters.push_back(n);
  }
  const std::uint32_t S = static_cast<std::uint32_t>(sg.s_letters.size());
  sg.q_letters.push_back("q");
  sg.q_letters.push_back("qhat");
  enc.q = S + 0;
  enc.qhat = S + 1;
  enc.q_of_state.resize(m.states.size());
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    std::string n = fresh_name(m.states[i], taken);
    taken.insert(n);
    enc.q_of_state[i] =
        static_cast<std::uint32_t>(S + sg.q_letters.size());
    sg.q_letters.push_back(n);
  }

  auto sym = [&](std::uint32_t j) { return enc.s_of_sym[j]; };
  auto st = [&](std::uint32_t i) { return enc.q_of_state[i]; };
  auto add = [&](SgWord lhs, SgWord rhs) {
    sg.relations.push_back({std::move(lhs), std::move(rhs)});
  };

  // One relation block per quadruple, in quadruple order.
  for (const Quad& qd : m.quads) {
    enc.quad_rel_base.push_back(
        static_cast<std::uint32_t>(sg.relations.size()));
    const std::uint32_t qi = st(qd.state), sj = sym(qd.sym);
    switch (qd.act) {
      case ActType::Write:
        add({qi, sj}, {st(qd.next), sym(qd.write_sym)});
        break;
      case ActType::MoveRight:
        for (std::uint32_t b = 0; b < m.alphabet.size(); ++b)
          add({qi, sj, sym(b)}, {sj, st(qd.next), sym(b)});
        add({qi, sj, enc.h}, {sj, st(qd.next), sym(0), enc.h});
        break;
      case ActType::MoveLeft:
        for (std::uint32_t b = 0; b < m.alphabet.size(); ++b)
          add({sym(b), qi, sj}, {st(qd.next), sym(b), sj});
        add({enc.h, qi, sj}, {enc.h, st(qd.next), sym(0), sj});
        break;
    }
  }

  // Cleanup: absorb the tape right of a halted head, switch to the sweep
  // letter at the right end marker, absorb leftward, collapse to q.
  enc.cleanup_base = static_cast<std::uint32_t>(sg.relations.size());
  const std::uint32_t qh = st(m.halt_state());
  for (std::uint32_t b = 0; b < m.alphabet.size(); ++b)
    add({qh, sym(b)}, {qh});
  add({qh, enc.h}, {enc.qhat, enc.h});
  for (std::uint32_t b = 0; b < m.alphabet.size(); ++b)
    add({sym(b), enc.qhat}, {enc.qhat});
  add({enc.h, enc.qhat, enc.h}, {enc.q});

  check_special(sg);
  return enc;
}

// h L q_i R h for a machine configuration.
inline SgWord config_word(const PostEncoding& enc, const Configuration& c) {
  SgWord w;
  w.push_back(enc.h);
  for (std::uint32_t s : c.left) w.push_back(enc.s_of_sym[s]);
  w.push_back(enc.q_of_state[c.state]);
  for (std::uint32_t s : c.right) w.push_back(enc.s_of_sym[s]);
  w.push_back(enc.h);
  return w;
}

// The start word h q_1 w h for raw machine input w.
inline SgWord input_word(const PostEncoding& enc,
                         const std::vector<std::uint32_t>& input) {
  Configuration c;
  c.state = 0;
  c.right = input;
  if (c.right.empty()) c.right.push_back(0);
  return config_word(enc, c);
}

// Apply one step to a word; nullopt when the named side does not occur at the
// given offset.
inline std::optional<SgWord> apply_derivation_step(
    const SemigroupPresentation& sg, const SgWord& w, const DerivStep& st) {
  if (st.rel >= sg.relations.size()) return std::nullopt;
  const SemigroupRelation& rel = sg.relations[st.rel];
  const SgWord& from = st.dir == StepDir::LR ? rel.lhs : rel.rhs;
  const SgWord& to = st.dir == StepDir::LR ? rel.rhs : rel.lhs;
  if (st.offset + from.size() > w.size()) return std::nullopt;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (w[st.offset + i] != from[i]) return std::nullopt;
  SgWord out;
  out.reserve(w.size() - from.size() + to.size());
  out.insert(out.end(), w.begin(), w.begin() + st.offset);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + st.offset + from.size(), w.end());
  return out;
}

// Replay a derivation from its start word; true iff every step applies and
// the final word equals the recorded end word.
inline bool verify_derivation(const SemigroupPresentation& sg,
                              const Derivation& d) {
  SgWord cur = d.start;
  for (const DerivStep& st : d.steps) {
    auto next = apply_derivation_step(sg, cur, st);
    if (!next) return false;
    cur = std::move(*next);
  }
  return cur == d.end;
}

// Build the derivation  h q_1 w h  =>  q  from a halting run trace. Step
// count is the machine step count plus |left| + |right| + 2 for the halt
// configuration's tape.
inline Derivation derive_from_trace(const TuringMachine& m,
                                    const PostEncoding& enc,
                                    const RunTrace& trace) {
  if (!trace.halted)
    throw std::invalid_argument("derive_from_trace needs a halting trace");
  Derivation d;
  d.start = config_word(enc, trace.configs.front());
  std::vector<DerivStep> steps;

  // Simulation phase: one relation application per machine step.
  for (std::size_t t = 0; t + 1 < trace.configs.size(); ++t) {
    const Configuration& c = trace.configs[t];
    const std::uint32_t scanned = c.right.front();
    // Find the quadruple that fired (unique by determinism).
    std::size_t qi = m.quads.size();
    for (std::size_t k = 0; k < m.quads.size(); ++k)
      if (m.quads[k].state == c.state && m.quads[k].sym == scanned) {
        qi = k;
        break;
      }
    if (qi == m.quads.size())
      throw std::logic_error("trace step without a matching quadruple");
    const Quad& qd = m.quads[qi];
    const std::uint32_t base = enc.quad_rel_base[qi];
    const std::uint32_t qpos = static_cast<std::uint32_t>(1 + c.left.size());
    switch (qd.act) {
      case ActType::Write:
        steps.push_back({base, StepDir::LR, qpos});
        break;
      case ActType::MoveRight:
        if (c.right.size() >= 2) {
          const std::uint32_t b = c.right[1];
          steps.push_back({base + b, StepDir::LR, qpos});
        } else {
          steps.push_back(
              {base + static_cast<std::uint32_t>(m.alphabet.size()),
               StepDir::LR, qpos});
        }
        break;
      case ActType::MoveLeft:
        if (!c.left.empty()) {
          const std::uint32_t b = c.left.back();
          steps.push_back({base + b, StepDir::LR, qpos - 1});
        } else {
          steps.push_back(
              {base + static_cast<std::uint32_t>(m.alphabet.size()),
               StepDir::LR, 0});
        }
        break;
    }
  }

  // Cleanup phase from the halt configuration.
  const Configuration& hc = trace.configs.back();
  if (hc.state != m.halt_state())
    throw std::logic_error("halting trace does not end in the halt state");
  const std::uint32_t A = static_cast<std::uint32_t>(m.alphabet.size());
  const std::uint32_t qpos = static_cast<std::uint32_t>(1 + hc.left.size());
  for (std::size_t i = 0; i < hc.right.size(); ++i)
    steps.push_back({enc.cleanup_base + hc.right[i], StepDir::LR, qpos});
  steps.push_back({enc.cleanup_base + A, StepDir::LR, qpos});
  for (std::size_t i = hc.left.size(); i-- > 0;)
    steps.push_back({enc.cleanup_base + A + 1 + hc.left[i], StepDir::LR,
                     static_cast<std::uint32_t>(1 + i)});
  steps.push_back({enc.cleanup_base + 2 * A + 1, StepDir::LR, 0});

  d.steps = std::move(steps);
  d.end = SgWord{enc.q};
  if (!verify_derivation(enc.sg, d))
    throw std::logic_error("derived step list failed replay");
  return d;
}

struct SgWordHash {
  std::size_t operator()(const SgWord& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Breadth-first search for a derivation from `from` to `to`. The budget
// bounds the number of words expanded; nullopt when it runs out. Neighbor
// order (relation ascending, LR before RL, offset ascending) makes the result
// deterministic, and BFS returns a derivation with the fewest steps.
inline std::optional<Derivation> rewrite_search(
    const SemigroupPresentation& sg, const SgWord& from, const SgWord& to,
    std::uint64_t budget) {
  struct ParentInfo {
    SgWord parent;
    DerivStep step;
  };
  std::unordered_map<SgWord, ParentInfo, SgWordHash> parent;
  std::deque<SgWord> queue;
  parent.emplace(from, ParentInfo{});
  queue.push_back(from);

  auto build = [&](const SgWord& last) {
    Derivation d;
    d.start = from;
    d.end = to;
    std::vector<DerivStep> rev;
    SgWord cur = last;
    while (cur != from) {
      const ParentInfo& pi = parent.at(cur);
      rev.push_back(pi.step);
      cur = pi.parent;
    }
    d.steps.assign(rev.rbegin(), rev.rend());
    return d;
  };

  if (from == to) return build(from);
  std::uint64_t expanded = 0;
  while (!queue.empty()) {
    if (expanded++ >= budget) return std::nullopt;
    const SgWord cur = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t r = 0; r < sg.relations.size(); ++r) {
      for (StepDir dir : {StepDir::LR, StepDir::RL}) {
        const SgWord& pat =
            dir == StepDir::LR ? sg.relations[r].lhs : sg.relations[r].rhs;
        if (pat.size() > cur.size()) continue;
        for (std::uint32_t off = 0;
             off + pat.size() <= cur.size(); ++off) {
          DerivStep st{r, dir, off};
          auto next = apply_derivation_step(sg, cur, st);
          if (!next) continue;
          if (parent.count(*next)) continue;
          parent.emplace(*next, ParentInfo{cur, st});
          if (*next == to) return build(*next);
          queue.push_back(std::move(*next));
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace fpg
