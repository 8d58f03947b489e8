#pragma once
// Bounded semi-decision engines for finitely presented groups: Todd-Coxeter
// coset enumeration, breadth-first search over products of conjugates of
// relators, and the composite searches built from those two primitives
// (triviality proving, the simple-group word problem, isomorphism search,
// and normal-generator search).
//
// Soundness contract: every positive answer carries a machine-checkable
// witness — a verified triviality certificate or a closed coset table — or,
// where noted, an exhaustive-enumeration argument spelled out in the reason
// string.  Running out of budget yields Unknown, never a wrong answer, and
// enlarging a budget can only turn Unknown into an answer.  All engines are
// single-threaded and deterministic: identical inputs and budgets give
// identical outputs, including tie-breaking and witness choice.

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/certificate.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

// Step ceiling plus an optional wall-clock ceiling.  Steps are the unit all
// engines meter themselves in: one coset definition or row visit for the
// enumerator, one candidate rewrite for the certificate search, one
// candidate examined for the outer searches.
struct Budget {
  std::uint64_t steps = 1'000'000;
  std::optional<std::uint64_t> wall_ms;
};

// Action table for the cosets of a subgroup.  Rows are cosets numbered from
// 1 (row 1 is the subgroup itself); columns come in pairs per generator,
// the action of g followed by the action of g^-1.  Entry 0 means undefined;
// a closed table has no undefined entries and is then a permutation
// representation of the group on the cosets.
struct CosetTable {
  std::uint32_t num_gens = 0;
  std::uint32_t rows = 0;
  bool closed = false;
  std::vector<std::uint32_t> act;  // rows * 2*num_gens entries

  std::uint32_t apply(std::uint32_t coset, const Letter& l) const {
    const std::size_t col =
        2 * static_cast<std::size_t>(l.gen) + (l.sign < 0 ? 1 : 0);
    return act[(static_cast<std::size_t>(coset) - 1) * (2 * num_gens) + col];
  }

  // Walks the word letter by letter; returns 0 if it runs off an undefined
  // entry (impossible on a closed table).
  std::uint32_t apply_word(std::uint32_t coset, const Word& w) const {
    for (const Letter& l : w.letters) {
      coset = apply(coset, l);
      if (coset == 0) return 0;
    }
    return coset;
  }
};

// Fully validates a closed table against its presentation: the columns must
// be mutually inverse permutations, every relator must fix every coset, and
// every subgroup generator must fix coset 1.
inline bool coset_table_consistent(const GroupPresentation& p,
                                   const std::vector<Word>& subgroup_gens,
                                   const CosetTable& t) {
  if (!t.closed || t.rows == 0) return false;
  if (t.num_gens != p.gens.size()) return false;
  if (t.act.size() !=
      static_cast<std::size_t>(t.rows) * 2 * t.num_gens)
    return false;
  for (std::uint32_t v : t.act)
    if (v < 1 || v > t.rows) return false;
  for (std::uint32_t g = 0; g < t.num_gens; ++g) {
    std::vector<bool> hit(t.rows + 1, false);
    for (std::uint32_t c = 1; c <= t.rows; ++c) {
      const std::uint32_t d = t.apply(c, pos(static_cast<std::int32_t>(g)));
      if (hit[d]) return false;  // not injective: not a permutation
      hit[d] = true;
      if (t.apply(d, neg(static_cast<std::int32_t>(g))) != c) return false;
    }
  }
  for (const Word& r : p.relators)
    for (std::uint32_t c = 1; c <= t.rows; ++c)
      if (t.apply_word(c, r) != c) return false;
  for (const Word& h : subgroup_gens)
    if (t.apply_word(1, h) != 1) return false;
  return true;
}

// Applies a generator map: each letter of w is replaced by the image of its
// generator (inverted for negative letters), then freely reduced.
inline Word map_word(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
      throw std::invalid_argument("map_word: letter outside the image table");
    const Word im =
        l.sign > 0 ? images[l.gen] : images[l.gen].inverse();
    out.letters.insert(out.letters.end(), im.letters.begin(),
                       im.letters.end());
  }
  return free_reduce(out);
}

namespace engine_detail {

// Memory guard shared by the unbounded-growth engines: a search whose
// backing store would exceed this many bytes stops growing and reports
// itself capped instead of thrashing the machine.  A capped search can no
// longer conclude anything, but other strategies keep running.
inline constexpr std::size_t kMaxSearchBytes = std::size_t(1) << 29;

inline std::optional<std::chrono::steady_clock::time_point> deadline_of(
    const Budget& b) {
  if (!b.wall_ms) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::milliseconds(*b.wall_ms);
}

inline bool expired(
    const std::optional<std::chrono::steady_clock::time_point>& dl) {
  return dl && std::chrono::steady_clock::now() >= *dl;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration, HLT strategy (relator scanning with
// definition fill-in) with a union-find coincidence queue.  Deterministic:
// cosets are defined in first-need order, relators scanned in presentation
// order, rows processed in ascending coset order.
// ---------------------------------------------------------------------------
class CosetEnumerator {
 public:
  CosetEnumerator(const GroupPresentation& p, std::vector<Word> subgroup_gens)
      : p_(p), subgens_(std::move(subgroup_gens)), ncols_(2 * p.gens.size()) {
    tab_.assign(2 * std::max<std::size_t>(ncols_, 1), 0);
    rep_ = {0, 1};  // coset numbering is 1-based; slot 0 is a sentinel
  }

  CosetEnumerator(const CosetEnumerator&) = delete;
  CosetEnumerator& operator=(const CosetEnumerator&) = delete;

  // Runs until the step counter reaches `target`, the table closes, or the
  // memory guard trips.  Steps = definitions + rows processed, so every
  // slice makes progress and the loop cannot stall silently.
  void run_until(std::uint64_t target) {
    if (closed_ || capped_) return;
    if (!subgens_done_) {
      for (const Word& h : subgens_) scan_and_fill(1, h);
      subgens_done_ = true;
    }
    while (alpha_ <= n_) {
      if (steps() >= target) return;
      if (tab_.size() * sizeof(std::uint32_t) > kMaxSearchBytes) {
        capped_ = true;
        return;
      }
      const std::uint32_t a = alpha_;
      if (find(a) == a) {
        for (const Word& r : p_.relators) {
          scan_and_fill(a, r);
          if (find(a) != a) break;  // the row died in a coincidence
        }
        if (find(a) == a)
          for (std::uint32_t c = 0; c < ncols_; ++c)
            if (slot(a, c) == 0) define(a, c);
      }
      ++processed_;
      ++alpha_;
    }
    closed_ = true;
  }

  bool closed() const { return closed_; }
  bool capped() const { return capped_; }
  bool finished() const { return closed_ || capped_; }
  std::uint64_t steps() const { return defs_ + processed_; }
  std::uint32_t order() const { return live_; }

  // Compacts the closed table: live cosets keep their relative order and
  // are renumbered 1..order().  Coset 1 is always live (coincidences keep
  // the smaller index), so the subgroup row stays row 1.
  CosetTable extract() {
    if (!closed_) throw std::logic_error("extract: table is not closed");
    std::vector<std::uint32_t> newid(n_ + 1, 0);
    std::uint32_t next = 0;
    for (std::uint32_t c = 1; c <= n_; ++c)
      if (find(c) == c) newid[c] = ++next;
    CosetTable t;
    t.num_gens = static_cast<std::uint32_t>(p_.gens.size());
    t.rows = next;
    t.closed = true;
    t.act.assign(static_cast<std::size_t>(next) * ncols_, 0);
    for (std::uint32_t c = 1; c <= n_; ++c) {
      if (find(c) != c) continue;
      for (std::uint32_t col = 0; col < ncols_; ++col)
        t.act[static_cast<std::size_t>(newid[c] - 1) * ncols_ + col] =
            newid[find(slot(c, col))];
    }
    return t;
  }

 private:
  static std::uint32_t col_of(const Letter& l) {
    return 2 * static_cast<std::uint32_t>(l.gen) + (l.sign < 0 ? 1u : 0u);
  }

  std::uint32_t& slot(std::uint32_t c, std::uint32_t col) {
    return tab_[static_cast<std::size_t>(c) * ncols_ + col];
  }

  std::uint32_t find(std::uint32_t a) {
    while (rep_[a] != a) {
      rep_[a] = rep_[rep_[a]];
      a = rep_[a];
    }
    return a;
  }

  void define(std::uint32_t from, std::uint32_t c) {
    ++n_;
    ++defs_;
    ++live_;
    tab_.resize(static_cast<std::size_t>(n_ + 1) * ncols_, 0);
    rep_.push_back(n_);
    slot(from, c) = n_;
    slot(n_, c ^ 1u) = from;
  }

  // Merges two cosets and propagates the consequences.  Rows of dying
  // cosets are emptied into their representatives; entries elsewhere that
  // still point at dead cosets are resolved lazily through find().
  void coincidence(std::uint32_t a, std::uint32_t b) {
    pending_.clear();
    pending_.push_back({a, b});
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      --live_;
      for (std::uint32_t c = 0; c < ncols_; ++c) {
        std::uint32_t d = slot(y, c);
        if (d == 0) continue;
        slot(y, c) = 0;
        d = find(d);
        std::uint32_t& xa = slot(x, c);
        if (xa == 0)
          xa = d;
        else
          pending_.push_back({find(xa), d});
        std::uint32_t& da = slot(d, c ^ 1u);
        if (da == 0)
          da = x;
        else
          pending_.push_back({find(da), x});
      }
    }
  }

  // Scans the word at coset a from both ends, defining cosets to bridge any
  // middle gap (the HLT fill-in rule), and records the deduction or
  // coincidence at the meeting point.
  void scan_and_fill(std::uint32_t a, const Word& w) {
    const auto& L = w.letters;
    std::uint32_t f = a;
    std::size_t i = 0;
    std::uint32_t b = a;
    std::size_t j = L.size();
    for (;;) {
      while (i < j && slot(f, col_of(L[i])) != 0) {
        f = find(slot(f, col_of(L[i])));
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && slot(b, col_of(L[j - 1]) ^ 1u) != 0) {
        b = find(slot(b, col_of(L[j - 1]) ^ 1u));
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {  // one letter left: deduction f * L[i] = b
        slot(f, col_of(L[i])) = b;
        slot(b, col_of(L[i]) ^ 1u) = f;
        return;
      }
      define(f, col_of(L[i]));
    }
  }

  const GroupPresentation& p_;
  std::vector<Word> subgens_;
  std::uint32_t ncols_;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> rep_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
  std::uint32_t n_ = 1;      // highest coset index defined so far
  std::uint32_t live_ = 1;   // cosets not merged away
  std::uint32_t alpha_ = 1;  // next row to process
  std::uint64_t defs_ = 0;
  std::uint64_t processed_ = 0;
  bool subgens_done_ = false;
  bool closed_ = false;
  bool capped_ = false;
};

// ---------------------------------------------------------------------------
// Breadth-first enumeration of the trivial words of a presentation.  Nodes
// are freely reduced words; the root is the empty word; the neighbors of a
// word are all free reductions of (prefix * relator^±1 * suffix).  Every
// visited word therefore carries a triviality certificate read off the
// parent chain: one conjugate-of-relator factor per tree edge.
//
// Deterministic order: nodes expand in first-visit order; neighbors are
// generated with the split position ascending, then the relator index
// ascending, then sign +1 before -1.  One step per candidate rewrite
// examined.
// ---------------------------------------------------------------------------
class TrivialWordSearch {
 public:
  explicit TrivialWordSearch(const GroupPresentation& p) : p_(p) {
    nodes_.push_back(Node{Word{}, 0, CertEntry{}});
    id_.emplace(Word{}, 0);
    queue_.push_back(0);
  }

  TrivialWordSearch(const TrivialWordSearch&) = delete;
  TrivialWordSearch& operator=(const TrivialWordSearch&) = delete;

  void expand_until(std::uint64_t target) {
    while (steps_ < target && qhead_ < queue_.size() && !capped_) {
      if (bytes_ > kMaxSearchBytes) {
        capped_ = true;
        return;
      }
      const std::uint32_t u = queue_[qhead_++];
      ++steps_;
      const Word base = nodes_[u].word;  // copy: nodes_ may reallocate
      for (std::size_t pos = 0; pos <= base.raw_length(); ++pos) {
        for (std::uint32_t r = 0;
             r < static_cast<std::uint32_t>(p_.relators.size()); ++r) {
          for (int s : {+1, -1}) {
            ++steps_;
            Word w;
            w.letters.assign(base.letters.begin(),
                             base.letters.begin() + pos);
            const Word rel =
                s > 0 ? p_.relators[r] : p_.relators[r].inverse();
            w.letters.insert(w.letters.end(), rel.letters.begin(),
                             rel.letters.end());
            w.letters.insert(w.letters.end(), base.letters.begin() + pos,
                             base.letters.end());
            w = free_reduce(w);
            if (id_.contains(w)) continue;
            CertEntry e{r, s,
                        Word{std::vector<Letter>(
                            base.letters.begin(), base.letters.begin() + pos)}};
            bytes_ += 64 + 8 * (w.raw_length() + e.conjugator.raw_length());
            id_.emplace(w, static_cast<std::uint32_t>(nodes_.size()));
            nodes_.push_back(Node{std::move(w), u, std::move(e)});
            queue_.push_back(static_cast<std::uint32_t>(nodes_.size() - 1));
          }
        }
      }
    }
  }

  std::uint64_t steps() const { return steps_; }
  bool capped() const { return capped_; }
  // True when every trivial word of the presentation has been visited (the
  // search space was finite and fully explored, with no memory cap).
  bool complete() const { return qhead_ == queue_.size() && !capped_; }
  bool frontier_done() const { return qhead_ == queue_.size() || capped_; }

  bool visited(const Word& w) const {
    return id_.contains(free_reduce(w));
  }

  // Certificate for a visited word, with the word as stated for its target.
  std::optional<TrivialityCertificate> certificate_for(const Word& w) const {
    const auto it = id_.find(free_reduce(w));
    if (it == id_.end()) return std::nullopt;
    TrivialityCertificate c;
    c.target = w;
    for (std::uint32_t v = it->second; v != 0; v = nodes_[v].parent)
      c.entries.push_back(nodes_[v].entry);
    return c;
  }

  std::size_t num_visited() const { return nodes_.size(); }
  const Word& visited_word(std::size_t i) const { return nodes_[i].word; }

 private:
  struct Node {
    Word word;
    std::uint32_t parent;
    CertEntry entry;  // edge label: word ~ conj * relator^sign * conj^-1 * parent
  };

  const GroupPresentation& p_;
  std::vector<Node> nodes_;
  std::unordered_map<Word, std::uint32_t, WordHash> id_;
  std::vector<std::uint32_t> queue_;
  std::size_t qhead_ = 0;
  std::uint64_t steps_ = 0;
  std::size_t bytes_ = 0;
  bool capped_ = false;
};

// All freely reduced words of exactly the given raw length over n
// generators, in lexicographic order of the letter codes (generator g
// before g^-1, lower generator index first).
inline std::vector<Word> reduced_words_of_length(std::size_t n_gens,
                                                 std::size_t len) {
  std::vector<Word> out;
  if (len == 0) {
    out.push_back(Word{});
    return out;
  }
  if (n_gens == 0) return out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == len) {
      out.push_back(Word{cur});
      return;
    }
    for (std::int32_t g = 0; g < static_cast<std::int32_t>(n_gens); ++g) {
      for (int s : {+1, -1}) {
        if (!cur.empty() && cur.back().gen == g && cur.back().sign != s)
          continue;  // would cancel: not freely reduced
        cur.push_back(Letter{g, s});
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

}  // namespace engine_detail

// ---------------------------------------------------------------------------
// Certificate enumeration and single-word certificate search.
// ---------------------------------------------------------------------------

// Fair, deterministic enumeration of trivial words with verifying
// certificates, in breadth-first order over products of conjugates of
// relators (certificate entry count ascending, then discovery order).  The
// empty word is emitted first with an empty certificate.  Exhaustive in the
// limit of budget.
inline std::vector<std::pair<Word, TrivialityCertificate>>
enumerate_trivial_words(const GroupPresentation& p, Budget budget = {}) {
  p.check();
  engine_detail::TrivialWordSearch s(p);
  s.expand_until(budget.steps);
  std::vector<std::pair<Word, TrivialityCertificate>> out;
  out.reserve(s.num_visited());
  for (std::size_t i = 0; i < s.num_visited(); ++i) {
    const Word& w = s.visited_word(i);
    out.emplace_back(w, *s.certificate_for(w));
  }
  return out;
}

// Searches for a triviality certificate for one word.  Sound and complete
// in the budget limit: returns a verified certificate whenever the word is
// trivial and the budget suffices.
inline std::optional<TrivialityCertificate> find_certificate(
    const GroupPresentation& p, const Word& w, Budget budget = {}) {
  p.check();
  for (const Letter& l : w.letters)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
      throw std::invalid_argument("word letter outside generator set");
  const Word target = free_reduce(w);
  engine_detail::TrivialWordSearch s(p);
  const auto dl = engine_detail::deadline_of(budget);
  while (!s.visited(target) && !s.frontier_done() &&
         s.steps() < budget.steps && !engine_detail::expired(dl))
    s.expand_until(std::min<std::uint64_t>(s.steps() + 4096, budget.steps));
  auto cert = s.certificate_for(w);
  if (cert && !verify_certificate(p, *cert))
    throw std::logic_error("internal: search produced an invalid certificate");
  return cert;
}

// ---------------------------------------------------------------------------
// Coset enumeration front end.
// ---------------------------------------------------------------------------

// Enumerates the cosets of the subgroup generated by `subgroup_gens`.
// Returns the closed table (row count = subgroup index; = group order for
// the trivial subgroup) or nullopt when the budget or memory guard ran out.
inline std::optional<CosetTable> coset_enumerate(
    const GroupPresentation& p, const std::vector<Word>& subgroup_gens,
    Budget budget = {}) {
  p.check();
  for (const Word& h : subgroup_gens)
    for (const Letter& l : h.letters)
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
        throw std::invalid_argument(
            "subgroup generator letter outside generator set");
  engine_detail::CosetEnumerator e(p, subgroup_gens);
  const auto dl = engine_detail::deadline_of(budget);
  while (!e.finished() && e.steps() < budget.steps &&
         !engine_detail::expired(dl))
    e.run_until(std::min<std::uint64_t>(e.steps() + 4096, budget.steps));
  if (!e.closed()) return std::nullopt;
  return e.extract();
}

// ---------------------------------------------------------------------------
// Triviality semi-decision.
// ---------------------------------------------------------------------------

// A proof that a presented group is trivial: either a closed one-coset
// table or a verified triviality certificate for every generator.
struct TrivialProof {
  enum class Kind { closed_table, generator_certificates };
  Kind kind = Kind::closed_table;
  CosetTable table;                              // kind == closed_table
  std::vector<TrivialityCertificate> gen_certs;  // one per generator
  std::string strategy;                          // which search concluded
};

struct TrivialityOutcome {
  std::optional<TrivialProof> proof;  // engaged iff proven trivial
  std::string reason;                 // success strategy or cause of Unknown
  std::uint64_t steps_used = 0;
};

namespace engine_detail {

// Resumable dovetail of coset enumeration (trivial subgroup) against
// certificate search for every generator, in fixed alternation.  Decides
// positively with a TrivialProof; decides negatively (still Unknown, with
// the reason recorded) when the coset table closes with more than one coset
// or the trivial-word enumeration completes without some generator.
class TrivialitySearch {
 public:
  explicit TrivialitySearch(GroupPresentation p)
      : p_(std::move(p)), tc_(p_, {}), ws_(p_) {}

  TrivialitySearch(const TrivialitySearch&) = delete;
  TrivialitySearch& operator=(const TrivialitySearch&) = delete;

  void run_for(std::uint64_t n) {
    const std::uint64_t target = steps() + n;
    while (!decided_ && steps() < target) {
      if (!tc_.finished()) {
        tc_.run_until(
            std::min<std::uint64_t>(tc_.steps() + 1024,
                                    tc_.steps() + (target - steps())));
        if (tc_.closed()) {
          if (tc_.order() == 1) {
            TrivialProof pr;
            pr.kind = TrivialProof::Kind::closed_table;
            pr.table = tc_.extract();
            pr.strategy = "coset enumeration closed with a single coset";
            conclude(std::move(pr));
            return;
          }
          decided_ = true;
          out_ = {std::nullopt,
                  "coset enumeration closed with " +
                      std::to_string(tc_.order()) +
                      " cosets; the group is nontrivial",
                  0};
          return;
        }
      }
      if (decided_ || steps() >= target) break;
      if (!ws_.frontier_done()) {
        ws_.expand_until(
            std::min<std::uint64_t>(ws_.steps() + 1024,
                                    ws_.steps() + (target - steps())));
      }
      if (try_generator_certificates()) return;
      if (ws_.complete()) {
        for (std::size_t g = 0; g < p_.gens.size(); ++g) {
          if (!ws_.visited(letter_word(pos(static_cast<std::int32_t>(g))))) {
            decided_ = true;
            out_ = {std::nullopt,
                    "the set of trivial words is finite and omits generator "
                    "'" + p_.gens[g] + "'; the group is nontrivial",
                    0};
            return;
          }
        }
      }
      if (tc_.finished() && ws_.frontier_done()) {
        // Neither strategy can make further progress (memory guards).
        decided_ = true;
        out_ = {std::nullopt,
                "search stalled: coset table " +
                    std::string(tc_.capped() ? "hit the memory guard"
                                             : "closed") +
                    " and the trivial-word search " +
                    std::string(ws_.capped() ? "hit the memory guard"
                                             : "was exhausted"),
                0};
        return;
      }
    }
  }

  bool decided() const { return decided_; }
  const TrivialityOutcome& outcome() const { return out_; }
  std::uint64_t steps() const { return tc_.steps() + ws_.steps(); }
  const GroupPresentation& presentation() const { return p_; }

 private:
  void conclude(TrivialProof pr) {
    decided_ = true;
    out_ = {std::move(pr), "", 0};
    out_.reason = out_.proof->strategy;
  }

  bool try_generator_certificates() {
    std::vector<TrivialityCertificate> certs;
    certs.reserve(p_.gens.size());
    for (std::size_t g = 0; g < p_.gens.size(); ++g) {
      auto c =
          ws_.certificate_for(letter_word(pos(static_cast<std::int32_t>(g))));
      if (!c) return false;
      if (!verify_certificate(p_, *c))
        throw std::logic_error(
            "internal: search produced an invalid certificate");
      certs.push_back(std::move(*c));
    }
    TrivialProof pr;
    pr.kind = TrivialProof::Kind::generator_certificates;
    pr.gen_certs = std::move(certs);
    pr.strategy = "triviality certificates found for all " +
                  std::to_string(p_.gens.size()) + " generators";
    conclude(std::move(pr));
    return true;
  }

  GroupPresentation p_;  // owned: callers often pass temporaries
  CosetEnumerator tc_;
  TrivialWordSearch ws_;
  bool decided_ = false;
  TrivialityOutcome out_;
};

}  // namespace engine_detail

// Semi-decides triviality of the presented group.  Sound always; complete
// in the budget limit for trivial groups.  When the group is proven
// nontrivial along the way (table closed with >1 coset, or the finite set
// of trivial words misses a generator), the outcome is Unknown with that
// finding in the reason.
inline TrivialityOutcome triviality_semi(const GroupPresentation& p,
                                         Budget budget = {}) {
  p.check();
  engine_detail::TrivialitySearch s(p);
  const auto dl = engine_detail::deadline_of(budget);
  while (!s.decided() && s.steps() < budget.steps &&
         !engine_detail::expired(dl))
    s.run_for(std::min<std::uint64_t>(4096, budget.steps - s.steps()));
  TrivialityOutcome out;
  if (s.decided())
    out = s.outcome();
  else
    out.reason = "budget exhausted after " + std::to_string(s.steps()) +
                 " steps without a decision";
  out.steps_used = s.steps();
  return out;
}

// ---------------------------------------------------------------------------
// Simple-group word problem.
// ---------------------------------------------------------------------------

enum class WpAnswer { trivial, nontrivial, unknown };

struct WpOutcome {
  WpAnswer answer = WpAnswer::unknown;
  std::optional<TrivialityCertificate> word_cert;     // trivial, by certificate
  std::vector<TrivialityCertificate> generator_certs; // nontrivial, by collapse
  std::optional<CosetTable> table;                    // decisive closed table
  std::string strategy;   // which of the four searches concluded
  std::string reason;
  std::uint64_t steps_used = 0;
};

// Classifies w in the group presented by p, which the caller asserts is a
// nontrivial simple group (a documented trust precondition: it cannot be
// verified here).  Four searches run in fixed round-robin order:
//   1. coset enumeration of p over the trivial subgroup — a closed table is
//      the regular representation, deciding w either way with no
//      precondition at all;
//   2. coset enumeration of p plus the extra relator w — closing with one
//      coset proves the normal closure of w is everything (w nontrivial);
//      closing with more than one uses simplicity to conclude w trivial;
//   3. certificate search for w among the trivial words of p;
//   4. certificate search proving every generator trivial in p plus w.
// Every positive answer carries the closed table or the verified
// certificates of the search that won.
inline WpOutcome simple_wp(const GroupPresentation& p, const Word& w,
                           Budget budget = {}) {
  p.check();
  for (const Letter& l : w.letters)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.gens.size())
      throw std::invalid_argument("word letter outside generator set");
  const Word wr = free_reduce(w);
  GroupPresentation q = p;
  q.relators.push_back(wr);

  engine_detail::CosetEnumerator tcp(p, {});
  engine_detail::CosetEnumerator tcq(q, {});
  engine_detail::TrivialWordSearch wsp(p);
  engine_detail::TrivialWordSearch wsq(q);
  const auto dl = engine_detail::deadline_of(budget);

  auto spent = [&] {
    return tcp.steps() + tcq.steps() + wsp.steps() + wsq.steps();
  };
  WpOutcome out;
  while (spent() < budget.steps && !engine_detail::expired(dl)) {
    const std::uint64_t slice = 1024;
    if (!tcp.finished()) {
      tcp.run_until(tcp.steps() + std::min(slice, budget.steps - spent()));
      if (tcp.closed()) {
        out.table = tcp.extract();
        const bool fixes = out.table->apply_word(1, wr) == 1;
        out.answer = fixes ? WpAnswer::trivial : WpAnswer::nontrivial;
        out.strategy = "coset enumeration of the presentation";
        out.reason = "the table closed with " +
                     std::to_string(out.table->rows) +
                     " cosets (the regular representation); the word " +
                     (fixes ? "fixes" : "moves") + " the subgroup coset";
        out.steps_used = spent();
        return out;
      }
    }
    if (spent() >= budget.steps) break;
    if (!tcq.finished()) {
      tcq.run_until(tcq.steps() + std::min(slice, budget.steps - spent()));
      if (tcq.closed()) {
        out.table = tcq.extract();
        out.strategy = "coset enumeration of the augmented presentation";
        if (out.table->rows == 1) {
          out.answer = WpAnswer::nontrivial;
          out.reason =
              "adding the word as a relator collapses the group to one "
              "coset, so its normal closure is everything";
        } else {
          out.answer = WpAnswer::trivial;
          out.reason = "adding the word as a relator leaves " +
                       std::to_string(out.table->rows) +
                       " cosets, so its normal closure is proper; by the "
                       "simplicity precondition the word must be trivial";
        }
        out.steps_used = spent();
        return out;
      }
    }
    if (spent() >= budget.steps) break;
    if (!wsp.frontier_done()) {
      wsp.expand_until(wsp.steps() + std::min(slice, budget.steps - spent()));
    }
    if (auto c = wsp.certificate_for(wr)) {
      if (!verify_certificate(p, *c))
        throw std::logic_error(
            "internal: search produced an invalid certificate");
      out.answer = WpAnswer::trivial;
      out.word_cert = std::move(c);
      out.strategy = "certificate search in the presentation";
      out.reason = "the word is a product of " +
                   std::to_string(out.word_cert->entries.size()) +
                   " conjugates of relators";
      out.steps_used = spent();
      return out;
    }
    if (wsp.complete()) {
      out.answer = WpAnswer::nontrivial;
      out.strategy = "trivial-word enumeration of the presentation";
      out.reason =
          "the set of trivial words is finite, was fully enumerated, and "
          "does not contain the word";
      out.steps_used = spent();
      return out;
    }
    if (spent() >= budget.steps) break;
    if (!wsq.frontier_done()) {
      wsq.expand_until(wsq.steps() + std::min(slice, budget.steps - spent()));
    }
    {
      std::vector<TrivialityCertificate> certs;
      bool all = true;
      for (std::size_t g = 0; g < q.gens.size() && all; ++g) {
        auto c = wsq.certificate_for(
            letter_word(pos(static_cast<std::int32_t>(g))));
        if (!c)
          all = false;
        else {
          if (!verify_certificate(q, *c))
            throw std::logic_error(
                "internal: search produced an invalid certificate");
          certs.push_back(std::move(*c));
        }
      }
      if (all) {
        out.answer = WpAnswer::nontrivial;
        out.generator_certs = std::move(certs);
        out.strategy = "certificate search in the augmented presentation";
        out.reason =
            "every generator becomes trivial once the word is adjoined as "
            "a relator, so its normal closure is everything";
        out.steps_used = spent();
        return out;
      }
      if (wsq.complete()) {
        out.answer = WpAnswer::trivial;
        out.strategy = "trivial-word enumeration of the augmented "
                       "presentation";
        out.reason =
            "adjoining the word leaves a finite trivial-word set missing "
            "some generator, so its normal closure is proper; by the "
            "simplicity precondition the word must be trivial";
        out.steps_used = spent();
        return out;
      }
    }
    if (tcp.finished() && tcq.finished() && wsp.frontier_done() &&
        wsq.frontier_done()) {
      out.reason = "all four strategies exhausted (memory guards) without a "
                   "decision";
      out.steps_used = spent();
      return out;
    }
  }
  out.reason = "budget exhausted after " + std::to_string(spent()) +
               " steps without a decision";
  out.steps_used = spent();
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search.
// ---------------------------------------------------------------------------

// A fully explicit isomorphism witness: generator images both ways, a
// triviality certificate for the image of every defining relator, and
// mutual-inverse certificates for every generator of both sides.
struct IsoWitness {
  std::vector<Word> forward;   // image in q of each generator of p
  std::vector<Word> backward;  // image in p of each generator of q
  std::vector<TrivialityCertificate> forward_relator_certs;   // in q
  std::vector<TrivialityCertificate> backward_relator_certs;  // in p
  std::vector<TrivialityCertificate> forward_inverse_certs;   // in p
  std::vector<TrivialityCertificate> backward_inverse_certs;  // in q
};

struct IsoOutcome {
  std::optional<IsoWitness> witness;
  std::string reason;
  std::uint64_t steps_used = 0;
};

// Re-derives every obligation of the witness and verifies its certificate:
// relator images must be trivial on both sides, and the two maps must
// compose to the identity on every generator.
inline bool verify_iso_witness(const GroupPresentation& p,
                               const GroupPresentation& q,
                               const IsoWitness& wit) {
  try {
    if (wit.forward.size() != p.gens.size()) return false;
    if (wit.backward.size() != q.gens.size()) return false;
    if (wit.forward_relator_certs.size() != p.relators.size()) return false;
    if (wit.backward_relator_certs.size() != q.relators.size()) return false;
    if (wit.forward_inverse_certs.size() != p.gens.size()) return false;
    if (wit.backward_inverse_certs.size() != q.gens.size()) return false;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const TrivialityCertificate& c = wit.forward_relator_certs[i];
      if (!freely_equal(c.target, map_word(p.relators[i], wit.forward)))
        return false;
      if (!verify_certificate(q, c)) return false;
    }
    for (std::size_t i = 0; i < q.relators.size(); ++i) {
      const TrivialityCertificate& c = wit.backward_relator_certs[i];
      if (!freely_equal(c.target, map_word(q.relators[i], wit.backward)))
        return false;
      if (!verify_certificate(p, c)) return false;
    }
    for (std::size_t g = 0; g < p.gens.size(); ++g) {
      const Word a = letter_word(pos(static_cast<std::int32_t>(g)));
      const Word round_trip = map_word(map_word(a, wit.forward), wit.backward);
      const TrivialityCertificate& c = wit.forward_inverse_certs[g];
      if (!freely_equal(c.target, concat(round_trip, a.inverse())))
        return false;
      if (!verify_certificate(p, c)) return false;
    }
    for (std::size_t g = 0; g < q.gens.size(); ++g) {
      const Word b = letter_word(pos(static_cast<std::int32_t>(g)));
      const Word round_trip = map_word(map_word(b, wit.backward), wit.forward);
      const TrivialityCertificate& c = wit.backward_inverse_certs[g];
      if (!freely_equal(c.target, concat(round_trip, b.inverse())))
        return false;
      if (!verify_certificate(q, c)) return false;
    }
    return true;
  } catch (const std::invalid_argument&) {
    return false;  // malformed images or letters out of range
  }
}

namespace engine_detail {

// Candidate generator maps into a group with `n_target` generators:
// k-tuples of reduced words ordered by total raw length, then by the
// composition of lengths (first slot shortest first), then word order
// within each slot.  The space is capped (total length and tuple count) so
// a search over it always terminates; the caps are far beyond what any
// desk-scale budget can consume.
class HomEnumerator {
 public:
  HomEnumerator(std::size_t arity, std::size_t n_target)
      : k_(arity), n_(n_target) {}

  // Next candidate, or nullptr when the (capped) space is exhausted.
  const std::vector<Word>* next() {
    while (idx_ >= buf_.size()) {
      if (done_) return nullptr;
      advance_total();
    }
    return &buf_[idx_++];
  }

  bool exhausted() const { return done_ && idx_ >= buf_.size(); }

 private:
  static constexpr std::size_t kMaxTotal = 10;
  static constexpr std::size_t kMaxTuples = 2'000'000;

  const std::vector<Word>& words(std::size_t len) {
    while (words_.size() <= len)
      words_.push_back(reduced_words_of_length(n_, words_.size()));
    return words_[len];
  }

  void advance_total() {
    buf_.clear();
    idx_ = 0;
    if (t_ == kMaxTotal) {
      done_ = true;
      return;
    }
    ++t_;
    if (k_ == 0) {
      if (t_ == 0) buf_.push_back({});
      done_ = true;
      return;
    }
    std::vector<Word> cur(k_);
    auto rec = [&](auto&& self, std::size_t slot,
                   std::size_t remaining) -> bool {
      if (buf_.size() > kMaxTuples) return false;
      if (slot + 1 == k_) {
        for (const Word& w : words(remaining)) {
          cur[slot] = w;
          buf_.push_back(cur);
          if (buf_.size() > kMaxTuples) return false;
        }
        return true;
      }
      for (std::size_t l = 0; l <= remaining; ++l)
        for (const Word& w : words(l)) {
          cur[slot] = w;
          if (!self(self, slot + 1, remaining - l)) return false;
        }
      return true;
    };
    if (!rec(rec, 0, t_)) {
      // Tuple cap hit: keep what was built (still deterministic) and stop.
      done_ = true;
    }
  }

  std::size_t k_;
  std::size_t n_;
  std::vector<std::vector<Word>> words_;
  std::vector<std::vector<Word>> buf_;
  std::size_t idx_ = 0;
  std::size_t t_ = static_cast<std::size_t>(-1);
  bool done_ = false;
};

}  // namespace engine_detail

// Searches for an explicit isomorphism between the presented groups.
// Candidate maps are enumerated by total image length both ways; a shared
// trivial-word search per side serves all certificate obligations, so work
// is never repeated across rounds.  An abelianization mismatch returns
// Unknown immediately (the groups are then provably non-isomorphic, which
// this engine reports in the reason but has no positive answer for).
// Complete in the budget limit for isomorphic pairs within the enumeration
// caps; any returned witness passes verify_iso_witness.
inline IsoOutcome iso_search(const GroupPresentation& p,
                             const GroupPresentation& q, Budget budget = {}) {
  p.check();
  q.check();
  if (!(abelian_invariants(p) == abelian_invariants(q)))
    return {std::nullopt,
            "the abelianizations differ, so the groups are not isomorphic",
            0};

  engine_detail::TrivialWordSearch sp(p);
  engine_detail::TrivialWordSearch sq(q);
  engine_detail::HomEnumerator ef(p.gens.size(), q.gens.size());
  engine_detail::HomEnumerator eb(q.gens.size(), p.gens.size());
  struct Cand {
    std::vector<Word> images;
    std::vector<Word> rel_targets;  // images of the source relators
  };
  std::vector<Cand> fwd, bwd;
  std::uint64_t charged = 0;  // steps beyond the two searches' own meters
  const auto dl = engine_detail::deadline_of(budget);
  auto spent = [&] { return sp.steps() + sq.steps() + charged; };

  auto extend = [&](std::vector<Cand>& list, engine_detail::HomEnumerator& en,
                    const GroupPresentation& src, std::size_t want) {
    while (list.size() < want && spent() < budget.steps) {
      const std::vector<Word>* t = en.next();
      if (!t) return;
      Cand c;
      c.images = *t;
      c.rel_targets.reserve(src.relators.size());
      for (const Word& r : src.relators)
        c.rel_targets.push_back(map_word(r, c.images));
      ++charged;
      list.push_back(std::move(c));
    }
  };

  for (std::size_t round = 0; spent() < budget.steps; ++round) {
    if (engine_detail::expired(dl)) break;
    const std::uint64_t slice = 2048;
    if (!sp.frontier_done())
      sp.expand_until(sp.steps() +
                      std::min(slice, budget.steps - spent()));
    if (spent() >= budget.steps) break;
    if (!sq.frontier_done())
      sq.expand_until(sq.steps() +
                      std::min(slice, budget.steps - spent()));
    const std::size_t want =
        std::size_t(64) << std::min<std::size_t>(round, 12);
    extend(fwd, ef, p, want);
    extend(bwd, eb, q, want);

    for (std::size_t i = 0; i < fwd.size(); ++i) {
      ++charged;
      bool ok = true;
      for (const Word& t : fwd[i].rel_targets)
        if (!sq.visited(t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (std::size_t j = 0; j < bwd.size(); ++j) {
        ++charged;
        if (spent() >= budget.steps) break;
        bool okb = true;
        for (const Word& t : bwd[j].rel_targets)
          if (!sp.visited(t)) {
            okb = false;
            break;
          }
        if (!okb) continue;
        // Mutual-inverse obligations for this pair.
        std::vector<Word> fwd_inv, bwd_inv;
        for (std::size_t g = 0; g < p.gens.size() && okb; ++g) {
          const Word a = letter_word(pos(static_cast<std::int32_t>(g)));
          const Word t = free_reduce(concat(
              map_word(map_word(a, fwd[i].images), bwd[j].images),
              a.inverse()));
          if (!sp.visited(t)) okb = false;
          fwd_inv.push_back(t);
        }
        for (std::size_t g = 0; g < q.gens.size() && okb; ++g) {
          const Word b = letter_word(pos(static_cast<std::int32_t>(g)));
          const Word t = free_reduce(concat(
              map_word(map_word(b, bwd[j].images), fwd[i].images),
              b.inverse()));
          if (!sq.visited(t)) okb = false;
          bwd_inv.push_back(t);
        }
        if (!okb) continue;
        IsoWitness wit;
        wit.forward = fwd[i].images;
        wit.backward = bwd[j].images;
        for (const Word& t : fwd[i].rel_targets)
          wit.forward_relator_certs.push_back(*sq.certificate_for(t));
        for (const Word& t : bwd[j].rel_targets)
          wit.backward_relator_certs.push_back(*sp.certificate_for(t));
        for (const Word& t : fwd_inv)
          wit.forward_inverse_certs.push_back(*sp.certificate_for(t));
        for (const Word& t : bwd_inv)
          wit.backward_inverse_certs.push_back(*sq.certificate_for(t));
        if (!verify_iso_witness(p, q, wit))
          throw std::logic_error(
              "internal: assembled isomorphism witness failed verification");
        return {std::move(wit),
                "isomorphism found: forward candidate " + std::to_string(i) +
                    ", backward candidate " + std::to_string(j),
                spent()};
      }
      if (spent() >= budget.steps) break;
    }
    if (sp.frontier_done() && sq.frontier_done() && ef.exhausted() &&
        eb.exhausted())
      return {std::nullopt,
              "candidate and certificate spaces exhausted without a witness",
              spent()};
  }
  return {std::nullopt,
          "budget exhausted after " + std::to_string(spent()) +
              " steps without a witness",
          spent()};
}

// ---------------------------------------------------------------------------
// Normal-generator search.
// ---------------------------------------------------------------------------

struct NormalGenOutcome {
  std::optional<Word> witness;        // word whose normal closure is everything
  std::optional<TrivialProof> proof;  // triviality proof of p plus the word
  std::string reason;
  std::uint64_t steps_used = 0;
};

// Searches for one word whose normal closure is the whole group: candidates
// are enumerated by raw length then lexicographic order (the empty word
// first), each tested by a resumable triviality search on the augmented
// presentation.  Slices are dealt in candidate order each round, so the
// returned witness is the first candidate proven trivial under this
// schedule.  Intended for perfect presentations (callers may pre-check
// is_perfect); sound for any input.
inline NormalGenOutcome normal_generator_search(const GroupPresentation& p,
                                                Budget budget = {}) {
  p.check();
  constexpr std::size_t kMaxCandidates = 4096;
  constexpr std::size_t kMaxLen = 8;
  std::deque<engine_detail::TrivialitySearch> searches;
  std::vector<Word> cands;
  std::vector<bool> dead;
  std::size_t next_len = 0;
  std::vector<Word> tier;
  std::size_t tier_idx = 0;
  std::uint64_t charged = 0;
  const auto dl = engine_detail::deadline_of(budget);
  auto spent = [&] {
    std::uint64_t s = charged;
    for (const auto& ts : searches) s += ts.steps();
    return s;
  };
  auto extend_to = [&](std::size_t want) {
    while (cands.size() < want && cands.size() < kMaxCandidates) {
      if (tier_idx >= tier.size()) {
        if (next_len > kMaxLen) return;
        tier = engine_detail::reduced_words_of_length(p.gens.size(),
                                                      next_len++);
        tier_idx = 0;
        if (tier.empty()) continue;
      }
      const Word& w = tier[tier_idx++];
      GroupPresentation aug = p;
      aug.relators.push_back(w);
      cands.push_back(w);
      dead.push_back(false);
      searches.emplace_back(std::move(aug));
      ++charged;
    }
  };

  for (std::size_t round = 0; spent() < budget.steps; ++round) {
    if (engine_detail::expired(dl)) break;
    extend_to(std::size_t(64) << std::min<std::size_t>(round, 12));
    bool any_alive = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (dead[i]) continue;
      if (spent() >= budget.steps) break;
      searches[i].run_for(std::min<std::uint64_t>(
          512, budget.steps - spent()));
      if (!searches[i].decided()) {
        any_alive = true;
        continue;
      }
      const TrivialityOutcome& o = searches[i].outcome();
      if (o.proof) {
        return {cands[i], *o.proof,
                "adjoining this word proves the group trivial (" +
                    o.proof->strategy + ")",
                spent()};
      }
      dead[i] = true;
    }
    const bool no_more_candidates =
        cands.size() >= kMaxCandidates ||
        (next_len > kMaxLen && tier_idx >= tier.size());
    if (!any_alive && no_more_candidates) {
      return {std::nullopt, std::nullopt,
              "every candidate within the caps was ruled out", spent()};
    }
  }
  return {std::nullopt, std::nullopt,
          "budget exhausted after " + std::to_string(spent()) +
              " steps without a witness",
          spent()};
}

// ---------------------------------------------------------------------------
// Abelianization pipeline.
// ---------------------------------------------------------------------------

// Looks for a length-1 nontriviality witness through the abelianization:
// returns the first generator with nonzero image in the abelianized group,
// or nullopt when the presentation is perfect (abelianization trivial on
// all generators).
inline std::optional<Word> abelianization_pipeline(
    const GroupPresentation& p) {
  p.check();
  for (std::int32_t g = 0; g < static_cast<std::int32_t>(p.gens.size()); ++g) {
    const Word w = letter_word(pos(g));
    if (!abelian_word_problem(p, w)) return w;
  }
  return std::nullopt;
}

}  // namespace fpg
