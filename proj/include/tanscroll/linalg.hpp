#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tanscroll/rational.hpp"

namespace tanscroll {

using RVec = std::vector<Rational>;

// Dense row-major matrix over Q.
class RMat {
 public:
  RMat() = default;
  RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct Echelon {
  RMat reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(RMat m);
std::size_t rank(const RMat& m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<RVec> nullspace(const RMat& m);

// The solution set {p + sum t_i d_i} of m x = rhs.
struct AffineSpace {
  RVec particular;
  std::vector<RVec> directions;
};
std::optional<AffineSpace> solve(const RMat& m, const RVec& rhs);

// True when every point of `a` lies in `b` and vice versa.
bool same_affine_space(const AffineSpace& a, const AffineSpace& b);

}  // namespace tanscroll
