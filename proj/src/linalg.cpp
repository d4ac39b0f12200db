#include "tanscroll/linalg.hpp"

#include <stdexcept>

namespace tanscroll {

Echelon rref(RMat m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(piv, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const RMat& m) { return rref(m).pivots.size(); }

std::vector<RVec> nullspace(const RMat& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSpace> solve(const RMat& m, const RVec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  RMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSpace s;
  s.particular.assign(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced(r, m.cols());
  s.directions = nullspace(m);
  return s;
}

namespace {

// Rank of the span of `vs` (each of length n).
std::size_t span_rank(const std::vector<RVec>& vs, std::size_t n) {
  RMat m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return rank(m);
}

bool contains(const AffineSpace& outer, const AffineSpace& inner) {
  const std::size_t n = outer.particular.size();
  if (inner.particular.size() != n) return false;
  const std::size_t r = span_rank(outer.directions, n);
  std::vector<RVec> ext = outer.directions;
  RVec diff(n);
  for (std::size_t j = 0; j < n; ++j) diff[j] = inner.particular[j] - outer.particular[j];
  ext.push_back(diff);
  if (span_rank(ext, n) != r) return false;
  for (const auto& d : inner.directions) {
    ext.back() = d;
    if (span_rank(ext, n) != r) return false;
  }
  return true;
}

}  // namespace

bool same_affine_space(const AffineSpace& a, const AffineSpace& b) { return contains(a, b) && contains(b, a); }

}  // namespace tanscroll
