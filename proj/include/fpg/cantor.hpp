#pragma once

// Cantor pairing on unsigned 64-bit integers, with the k-tuple extension by
// left fold: code(x1, ..., xk) = pair(...pair(pair(x1, x2), x3)..., xk).

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpg {

inline std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t s = x + y;
  // (s * (s+1)) / 2 + y; divide the even factor first to avoid overflow.
  const std::uint64_t tri = (s % 2 == 0) ? (s / 2) * (s + 1) : s * ((s + 1) / 2);
  return tri + y;
}

// Integer square root by Newton iteration.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while (x > n / x) --x;               // guard against rounding high
  while ((x + 1) <= n / (x + 1)) ++x;  // guard against rounding low
  return x;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // Find the diagonal: largest w with w(w+1)/2 <= z.
  std::uint64_t w = (isqrt_u64(8 * z + 1) - 1) / 2;
  auto tri = [](std::uint64_t n) {
    return (n % 2 == 0) ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
  };
  while (tri(w + 1) <= z) ++w;
  while (tri(w) > z) --w;
  const std::uint64_t y = z - tri(w);
  return {w - y, y};
}

inline std::uint64_t cantor_tuple(const std::vector<std::uint64_t>& xs) {
  if (xs.empty())
    throw std::invalid_argument("cantor_tuple needs at least one component");
  std::uint64_t acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = cantor_pair(acc, xs[i]);
  return acc;
}

inline std::vector<std::uint64_t> cantor_untuple(std::uint64_t z,
                                                 std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("cantor_untuple needs at least one component");
  std::vector<std::uint64_t> out(k);
  for (std::size_t i = k; i-- > 1;) {
    auto [a, b] = cantor_unpair(z);
    out[i] = b;
    z = a;
  }
  out[0] = z;
  return out;
}

}  // namespace fpg
