#pragma once

// The named presentation families built from machines. Pi(M, n) feeds the
// Boone group of M and the word beta(s_1^{n+1}) through Gordon's
// construction, so it presents the trivial group exactly when M halts on the
// unary input of n. Psi and Phi cross Pi with a cyclic group (the i-th prime,
// respectively 2) and re-run Gordon at a generator of the inner layer; the
// result is trivial in the halting case and otherwise has that cyclic factor
// as its only torsion. Free products of family members and the bounded-length
// adversary round out the toolbox.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/boone.hpp"
#include "fpg/gordon.hpp"
#include "fpg/machine.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// Pi(M, n) = gordon(B(M), beta(s_1^{n+1})). Machines must use the two-symbol
// tape alphabet the unary input convention is defined over.
inline GroupPresentation pi(const TuringMachine& m, std::uint64_t n) {
  if (m.alphabet.size() != 2)
    throw std::invalid_argument("pi needs a two-symbol tape alphabet");
  const BooneGroup b = boone_encode(m);
  GroupPresentation out = gordon(b.p, beta_for_input(b, phi_input(n)));
  out.name = "Pi(" + m.name + "," + std::to_string(n) + ")";
  return out;
}

// p_0 = 2, p_1 = 3, ... by trial division.
inline std::uint64_t nth_prime(std::uint64_t i) {
  std::uint64_t seen = 0;
  for (std::uint64_t c = 2;; ++c) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime && seen++ == i) return c;
  }
}

namespace gadget_detail {

// The generator Gordon adjoined as b when building `outer` over an inner
// presentation: third from the end of the inner layer's generator list.
inline std::int32_t inner_b_generator(const GroupPresentation& inner_gordon) {
  return static_cast<std::int32_t>(inner_gordon.gens.size()) - 2;
}

inline GroupPresentation cyclic_then_gordon(const TuringMachine& m,
                                            std::uint64_t i,
                                            std::uint64_t modulus,
                                            const std::string& family) {
  const GroupPresentation inner = pi(m, i);
  const Word xi = letter_word(pos(gadget_detail::inner_b_generator(inner)));
  GroupPresentation out =
      gordon(direct_product_with_cyclic(inner, modulus), xi);
  out.name = family + "(" + m.name + "," + std::to_string(i) + ")";
  return out;
}

}  // namespace gadget_detail

// Psi(M, i) = (Pi(M, i) x C_{p_i})(x_i) with x_i the b generator of Pi's
// Gordon layer.
inline GroupPresentation psi(const TuringMachine& m, std::uint64_t i) {
  return gadget_detail::cyclic_then_gordon(m, i, nth_prime(i), "Psi");
}

// Phi(M, i) = (Pi(M, i) x C_2)(x_i).
inline GroupPresentation phi_family(const TuringMachine& m, std::uint64_t i) {
  return gadget_detail::cyclic_then_gordon(m, i, 2, "Phi");
}

inline GroupPresentation free_product_family(
    const std::vector<GroupPresentation>& ps) {
  if (ps.empty())
    throw std::invalid_argument("free_product_family: empty sequence");
  GroupPresentation out = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) out = free_product(out, ps[i]);
  return out;
}

// The free-product adversary against bounded-length nontrivial-element
// pickers: k+1 Pi factors (factor j gets input index j), their free product,
// a sample length-k word, and the factor the sample provably misses.
struct AdversaryReport {
  std::vector<GroupPresentation> factors;
  GroupPresentation product;
  Word sample;
  std::size_t untouched_factor = 0;
  std::string narrative;
};

inline AdversaryReport adversary_demo(std::uint64_t k,
                                      const std::vector<TuringMachine>& ms) {
  if (k < 1) throw std::invalid_argument("adversary_demo: k must be positive");
  if (ms.size() != k + 1)
    throw std::invalid_argument("adversary_demo: need exactly k+1 machines");

  AdversaryReport rep;
  for (std::size_t j = 0; j < ms.size(); ++j)
    rep.factors.push_back(pi(ms[j], j));
  rep.product = free_product_family(rep.factors);

  // Factor j owns a contiguous generator block in the product.
  std::vector<std::size_t> offset(rep.factors.size() + 1, 0);
  for (std::size_t j = 0; j < rep.factors.size(); ++j)
    offset[j + 1] = offset[j] + rep.factors[j].gens.size();

  // Sample word: the first generator of each of the first k factors.
  for (std::uint64_t j = 0; j < k; ++j)
    rep.sample.append(pos(static_cast<std::int32_t>(offset[j])));

  std::vector<bool> touched(rep.factors.size(), false);
  for (const Letter& l : rep.sample.letters) {
    std::size_t j = 0;
    while (static_cast<std::size_t>(l.gen) >= offset[j + 1]) ++j;
    touched[j] = true;
  }
  while (touched[rep.untouched_factor]) ++rep.untouched_factor;

  std::string& s = rep.narrative;
  s += "Adversary for bounded nontrivial-element pickers, k = " +
       std::to_string(k) + ".\n";
  s += "Factors:";
  for (const GroupPresentation& f : rep.factors) s += " " + f.name;
  s += "; their free product has " + std::to_string(rep.product.gens.size()) +
       " generators.\n";
  s += "Each factor presents the trivial group exactly when its machine halts "
       "on the matching unary input, so the product is nontrivial as soon as "
       "one machine fails to halt.\n";
  s += "Suppose a picker always returned a nontrivial word of raw length at "
       "most " +
       std::to_string(k) + "; a sample such output is " +
       print_word(rep.sample, rep.product.gens) + ".\n";
  s += "A word that short touches at most " + std::to_string(k) + " of the " +
       std::to_string(k + 1) +
       " factors; the sample misses factor " +
       std::to_string(rep.untouched_factor) + " (" +
       rep.factors[rep.untouched_factor].name + ").\n";
  s += "A nontrivial word lies inside the free product of the factors it "
       "touches, so some touched factor is nontrivial, and removing the "
       "untouched one keeps a collection that is not all trivial.\n";
  s += "Iterating that removal would let a computer shrink any finite set of "
       "inputs not contained in a machine's halting set down to a proper "
       "subset with the same property, which no partial recursive function "
       "can do. Hence no such picker exists.\n";
  return rep;
}

}  // namespace fpg
