#pragma once

// Words over the generators of a finitely presented group: signed generator
// sequences with free reduction. Raw (unreduced) length is kept queryable
// because several constructions downstream measure words before reduction.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace fpg {

// One letter: gen >= 0 selects a generator, sign is +1 or -1.
struct Letter {
  std::int32_t gen;
  std::int32_t sign;

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return Letter{gen, -sign}; }
};

inline Letter pos(std::int32_t gen) { return Letter{gen, +1}; }
inline Letter neg(std::int32_t gen) { return Letter{gen, -1}; }

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  static Word one() { return Word{}; }

  // Raw length: number of letters as written, before any reduction.
  std::size_t raw_length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

  Word inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.push_back(it->inverse());
    return out;
  }

  Word& append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }
  Word& append(Letter l) {
    letters.push_back(l);
    return *this;
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.append(p);
  return out;
}

// g^e as raw letters; e may be negative or zero.
inline Word power_word(std::int32_t gen, std::int64_t e) {
  Word out;
  const Letter l = e >= 0 ? pos(gen) : neg(gen);
  for (std::int64_t i = 0, n = std::llabs(e); i < n; ++i) out.append(l);
  return out;
}

inline Word letter_word(Letter l) { return Word{{l}}; }

// Cancel adjacent inverse pairs until none remain. Single left-to-right pass
// with a stack; idempotent.
inline Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline bool freely_equal(const Word& a, const Word& b) {
  return free_reduce(a) == free_reduce(b);
}

// Commutator convention fixed project-wide: [u, v] = u^{-1} v^{-1} u v.
inline Word commutator(const Word& u, const Word& v) {
  Word out = u.inverse();
  out.append(v.inverse());
  out.append(u);
  out.append(v);
  return out;
}

// Conjugate u w u^{-1} (u acting on the left).
inline Word conjugated(const Word& u, const Word& w) {
  Word out = u;
  out.append(w);
  out.append(u.inverse());
  return out;
}

// Exponent-sum vector of w over num_gens generators (abelianized image).
inline std::vector<std::int64_t> exponent_vector(const Word& w,
                                                 std::size_t num_gens) {
  std::vector<std::int64_t> v(num_gens, 0);
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= num_gens)
      throw std::out_of_range("exponent_vector: letter outside generator set");
    v[static_cast<std::size_t>(l.gen)] += l.sign;
  }
  return v;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    // FNV-1a over the letter stream.
    std::uint64_t h = 1469598103934665603ull;
    for (const Letter& l : w.letters) {
      const std::uint64_t v =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.gen)) << 1) ^
          (l.sign > 0 ? 0u : 1u);
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fpg
