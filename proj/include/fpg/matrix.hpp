#pragma once

// Dense integer matrices over GMP integers (row-major). Entries during
// elimination can grow far past 64 bits, so everything is mpz_class.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fpg {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  // row i -= f * row j
  void row_sub(std::size_t i, std::size_t j, const mpz_class& f) {
    for (std::size_t c = 0; c < cols; ++c) at(i, c) -= f * at(j, c);
  }
  // col i -= f * col j
  void col_sub(std::size_t i, std::size_t j, const mpz_class& f) {
    for (std::size_t r = 0; r < rows; ++r) at(r, i) -= f * at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
  void row_add(std::size_t i, std::size_t j) {  // row i += row j
    for (std::size_t c = 0; c < cols; ++c) at(i, c) += at(j, c);
  }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const mpz_class& f = x.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        out.at(i, j) += f * y.at(k, j);
    }
  return out;
}

// v * M for a row vector v.
inline std::vector<mpz_class> vec_mat_mul(const std::vector<mpz_class>& v,
                                          const IntMatrix& m) {
  if (v.size() != m.rows) throw std::invalid_argument("vec_mat_mul shape");
  std::vector<mpz_class> out(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

}  // namespace fpg
