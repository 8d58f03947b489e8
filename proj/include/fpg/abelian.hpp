#pragma once

// Smith normal form and the abelianized invariants/word-problem layer built
// on it. The SNF routine is fully deterministic: the pivot is always the
// minimum-absolute-value nonzero entry of the working submatrix, ties broken
// by lowest row then lowest column.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fpg/matrix.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

struct SmithResult {
  IntMatrix d;  // diagonal, nonnegative, d_i | d_{i+1}
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform; u * m * v == d
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  IntMatrix& d = r.d;
  const std::size_t n = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Deterministic pivot: minimal |entry| in the submatrix, lowest
      // (row, col) on ties.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (!found || mpz_cmpabs(d.at(i, j).get_mpz_t(),
                                   d.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return r;  // submatrix is zero; remaining diagonal is 0

      d.swap_rows(t, pi);
      r.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      r.v.swap_cols(t, pj);
      if (d.at(t, t) < 0) {
        d.negate_row(t);
        r.u.negate_row(t);
      }

      // Reduce column t and row t by the pivot (truncated quotients leave
      // remainders strictly smaller in absolute value).
      bool residue = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.row_sub(i, t, q);
          r.u.row_sub(i, t, q);
        }
        if (d.at(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.col_sub(j, t, q);
          r.v.col_sub(j, t, q);
        }
        if (d.at(t, j) != 0) residue = true;
      }
      if (residue) continue;  // smaller entries appeared; re-pivot

      // Divisibility: the pivot must divide the rest of the submatrix.
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols && !fixed; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(),
                               d.at(t, t).get_mpz_t())) {
            d.row_add(t, i);
            r.u.row_add(t, i);
            fixed = true;
          }
      if (!fixed) break;  // this diagonal entry is settled
    }
  }
  return r;
}

// Structural + algebraic check of an SNF result against its input. Used by
// tests and by callers that want the extra assurance; O(n^3) multiply.
inline bool verify_smith(const IntMatrix& m, const SmithResult& r) {
  if (r.d.rows != m.rows || r.d.cols != m.cols) return false;
  if (r.u.rows != m.rows || r.u.cols != m.rows) return false;
  if (r.v.rows != m.cols || r.v.cols != m.cols) return false;
  for (std::size_t i = 0; i < r.d.rows; ++i)
    for (std::size_t j = 0; j < r.d.cols; ++j) {
      if (i != j && r.d.at(i, j) != 0) return false;
      if (i == j && r.d.at(i, j) < 0) return false;
    }
  const std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const mpz_class& a = r.d.at(i, i);
    const mpz_class& b = r.d.at(i + 1, i + 1);
    if (a == 0 && b != 0) return false;
    if (a != 0 && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
  }
  return mat_mul(mat_mul(r.u, m), r.v) == r.d;
}

// Rows = relators, columns = generators, entries = exponent sums.
inline IntMatrix relation_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.gens.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto v = exponent_vector(p.relators[i], p.gens.size());
    for (std::size_t j = 0; j < p.gens.size(); ++j) m.at(i, j) = v[j];
  }
  return m;
}

// The abelianization as Z^free_rank + sum of Z/d_i with 1 < d_1 | d_2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

inline AbelianInvariants invariants_from_diagonal(const IntMatrix& d) {
  AbelianInvariants inv;
  const std::size_t n = std::min(d.rows, d.cols);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.at(i, i) == 0) break;
    ++rank;
    if (d.at(i, i) > 1) inv.torsion.push_back(d.at(i, i));
  }
  inv.free_rank = d.cols - rank;
  return inv;
}

inline AbelianInvariants abelian_invariants(const GroupPresentation& p) {
  // Commutator relators abelianize to zero rows, so the plain relation
  // matrix already presents the abelianization.
  return invariants_from_diagonal(smith_normal_form(relation_matrix(p)).d);
}

// Does w die in the abelianization? True iff its exponent vector lies in the
// row lattice of the relation matrix, decided through the SNF transform.
inline bool abelian_word_problem(const GroupPresentation& p, const Word& w) {
  const IntMatrix m = relation_matrix(p);
  const SmithResult snf = smith_normal_form(m);
  auto ev = exponent_vector(w, p.gens.size());
  std::vector<mpz_class> v(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) v[i] = ev[i];
  const std::vector<mpz_class> vp = vec_mat_mul(v, snf.v);
  const std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < vp.size(); ++i) {
    if (i < n && snf.d.at(i, i) != 0) {
      if (!mpz_divisible_p(vp[i].get_mpz_t(), snf.d.at(i, i).get_mpz_t()))
        return false;
    } else if (vp[i] != 0) {
      return false;
    }
  }
  return true;
}

inline bool is_perfect(const GroupPresentation& p) {
  const AbelianInvariants inv = abelian_invariants(p);
  return inv.free_rank == 0 && inv.torsion.empty();
}

}  // namespace fpg
