#pragma once

// Canonical, human-readable renderings of the two relation schemas (the
// machine-to-semigroup encoding and the semigroup-to-group construction),
// plus an FNV-1a checksum over each. The CLI prints the checksums under
// --version so downstream users can tell at a glance whether two builds
// generate presentations from the same tables. The strings are frozen;
// regression tests pin the checksum values.

#include <cstdint>
#include <string>

namespace fpg {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Relation families of the semigroup encoding. Letters: end marker h,
// tape letters s_b (s_0 blank), state letters q_i, sweep letters qhat and q.
inline const std::string& post_schema_text() {
  static const std::string text =
      "semigroup schema v1\n"
      "write (q_i,s_j)->(s_k,q_l):  q_i s_j = q_l s_k\n"
      "right (q_i,s_j)->q_l:        q_i s_j s_b = s_j q_l s_b   (each tape s_b)\n"
      "                             q_i s_j h = s_j q_l s_0 h\n"
      "left  (q_i,s_j)->q_l:        s_b q_i s_j = q_l s_b s_j   (each tape s_b)\n"
      "                             h q_i s_j = h q_l s_0 s_j\n"
      "cleanup:                     q_halt s_b = q_halt         (each tape s_b)\n"
      "                             q_halt h = qhat h\n"
      "                             s_b qhat = qhat             (each tape s_b)\n"
      "                             h qhat h = q\n";
  return text;
}

// Relator families of the group construction over a special semigroup with
// s-letters s_b, q-letters q_*, one r_i per semigroup relation
// F_i q_{a_i} G_i = H_i q_{b_i} K_i, and the three extra generators x, t, k.
// U(w) decorates each letter s as (x s); V(w) decorates each as (s x).
// Every relator is stored as a left/right split; the relator itself is
// left * right^{-1}.
inline const std::string& boone_schema_text() {
  static const std::string text =
      "group schema v1\n"
      "doubling (each s_b):         x s_b = s_b x x\n"
      "carry (each i, s_b):         r_i^-1 x s_b r_i = s_b x\n"
      "main (each i):               r_i^-1 x x F_i q_{a_i} U(G_i) r_i = "
      "x H_i q_{b_i} V(K_i)\n"
      "t-x:                         t x = x t\n"
      "t-r (each i):                t r_i = r_i t\n"
      "k-x:                         k x = x k\n"
      "k-r (each i):                k r_i = r_i k\n"
      "final:                       q^-1 t^-1 q k^-1 q^-1 t q k = 1\n";
  return text;
}

inline std::uint64_t post_schema_checksum() {
  return fnv1a64(post_schema_text());
}
inline std::uint64_t boone_schema_checksum() {
  return fnv1a64(boone_schema_text());
}

}  // namespace fpg
