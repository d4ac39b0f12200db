#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tanscroll {

// Division-free determinant of an n x n matrix over a commutative ring.
// Expands row by row, memoising the partial determinants on the set of columns
// already used, so the cost is O(n * 2^n) ring multiplications. `at(i, j)`
// returns the entry, `nonzero(x)` tests an entry.
template <class T, class At, class NonZero>
T laplace_determinant(std::size_t n, At&& at, NonZero&& nonzero, const T& zero, const T& one) {
  if (n == 0) return one;
  if (n > 24) throw std::length_error("laplace_determinant: matrix too large");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::optional<T>> partial(std::size_t{full} + 1);
  partial[0] = one;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!partial[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (mask & bit) continue;
      const T& a = at(row, j);
      if (!nonzero(a)) continue;
      T term = a * *partial[mask];
      const bool negative = std::popcount(mask >> (j + 1)) & 1;
      auto& slot = partial[mask | bit];
      if (!slot) slot = zero;
      if (negative)
        *slot -= term;
      else
        *slot += term;
    }
    partial[mask].reset();
  }
  return partial[full] ? *partial[full] : zero;
}

}  // namespace tanscroll
