// Textbook formulas used as independent references.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "tanscroll/linalg.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/polymat.hpp"
#include "tanscroll/upoly.hpp"

namespace oracle {

using tanscroll::MPoly;
using tanscroll::Rational;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

// Leibniz sum over permutations.
template <class T, class At>
T leibniz(std::size_t n, At at, T zero) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n == 0) return T(1);
  T total = zero;
  do {
    T term = at(0, p[0]);
    for (std::size_t i = 1; i < n; ++i) term = term * at(i, p[i]);
    if (permutation_sign(p) < 0)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Rational det(const tanscroll::RMat& m) {
  return leibniz<Rational>(m.rows(), [&](std::size_t i, std::size_t j) { return m(i, j); }, Rational(0));
}

inline MPoly det(const tanscroll::PMat& m) {
  return leibniz<MPoly>(m.rows(), [&](std::size_t i, std::size_t j) { return m(i, j); }, MPoly());
}

// Sum over perfect matchings with the crossing-number sign.
inline MPoly pfaffian_matchings(const tanscroll::SkewPMat& a, std::vector<std::size_t> idx) {
  if (idx.empty()) return MPoly(1);
  MPoly total;
  const std::size_t i = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    MPoly term = a(i, idx[k]) * pfaffian_matchings(a, rest);
    if (k % 2)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Rank as the largest nonvanishing minor size.
inline std::size_t rank_by_minors(const tanscroll::RMat& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : tanscroll::combinations(m.rows(), k))
      for (const auto& cs : tanscroll::combinations(m.cols(), k)) {
        tanscroll::RMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        if (det(sub) != 0) return k;
      }
  return 0;
}

// Resultant as the determinant of the Sylvester matrix, for univariate inputs.
inline Rational sylvester_resultant(const tanscroll::UPoly& a, const tanscroll::UPoly& b) {
  const int m = a.degree(), n = b.degree();
  const auto size = static_cast<std::size_t>(m + n);
  tanscroll::RMat s(size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = a.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = b.coeff(n - k);
  return det(s);
}

}  // namespace oracle
