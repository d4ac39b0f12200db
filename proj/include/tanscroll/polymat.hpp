#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanscroll/bform.hpp"
#include "tanscroll/linalg.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/parallel.hpp"

namespace tanscroll {

// Dense row-major matrix of polynomials.
class PMat {
 public:
  PMat() = default;
  PMat(std::size_t rows, std::size_t cols);
  PMat(std::size_t rows, std::size_t cols, std::vector<MPoly> entries);

  // Rows are the gradients of `fs` with respect to `vars`.
  static PMat jacobian(const std::vector<MPoly>& fs, const std::vector<std::string>& vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<MPoly>& entries() const { return e_; }

  bool is_zero() const;
  PMat substitute(const MPoly::Bindings& b) const;
  // Throws std::invalid_argument on an unbound variable.
  RMat evaluate(const MPoly::Point& point) const;

  friend PMat operator*(const PMat& a, const PMat& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MPoly> e_;
};

// Square matrix with M^T = -M and zero diagonal, checked on construction.
class SkewPMat {
 public:
  SkewPMat() = default;
  explicit SkewPMat(PMat m);
  // Fills m(i,j) = upper(i,j) for i < j and the lower triangle by antisymmetry.
  static SkewPMat from_upper(std::size_t n, const std::function<MPoly(std::size_t, std::size_t)>& upper);

  std::size_t dim() const { return m_.rows(); }
  const PMat& matrix() const { return m_; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  SkewPMat substitute(const MPoly::Bindings& b) const { return SkewPMat(m_.substitute(b)); }

 private:
  PMat m_;
};

// Determinant of the submatrix on the given rows and columns. Throws
// std::invalid_argument on a size mismatch or an out-of-range index.
MPoly minor(const PMat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
MPoly determinant(const PMat& m);

// Rank of the evaluated rational matrix.
std::size_t rank_at_point(const PMat& m, const MPoly::Point& point);

// A parametrised curve: each matrix variable is sent to a binary form in
// (s0, s1).
using Curve = std::map<std::string, BForm, std::less<>>;

// Matrix of binary forms: a polynomial matrix restricted to a curve.
class FormMatrix {
 public:
  FormMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BForm& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BForm& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  RMat evaluate(const Rational& s0, const Rational& s1) const;
  BForm minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_, cols_;
  std::vector<BForm> e_;
};

// Throws std::invalid_argument when an entry involves a variable the curve
// does not bind, or does not restrict to a homogeneous form.
FormMatrix restrict_to_curve(const PMat& m, const Curve& curve);

// Rank over the function field of P^1. Exact: the matrix is evaluated at more
// points (1:k) than any nonzero minor has roots.
std::size_t generic_rank(const FormMatrix& m);

// Normalised gcd of all order x order minors (zero if they all vanish).
BForm gcd_of_minors(const FormMatrix& m, std::size_t order, Execution exec = Execution::parallel);

struct CurveRank {
  std::size_t generic_rank = 0;
  // gcd of the maximal nonvanishing minors; present when requested.
  std::optional<BForm> drop_locus;
};

// Throws std::domain_error when a drop locus is requested for a matrix that
// vanishes identically along the curve.
CurveRank rank_along_curve(const PMat& m, const Curve& curve, bool want_drop_locus = true,
                           Execution exec = Execution::parallel);

// Pfaffian by expansion along the first row:
//   Pf(M) = sum_{k>=1} (-1)^(k+1) m_{0k} Pf(M without rows/cols 0 and k),
// so Pf([[0,1],[-1,0]]) = 1. Throws std::invalid_argument on odd dimension.
MPoly pfaffian(const SkewPMat& m);

struct SubPfaffian {
  std::vector<std::size_t> deleted;  // indices removed, ascending
  MPoly value;
};

// Pfaffians of the principal submatrices of size `order`, indexed by the
// deleted index sets in lexicographic order.
std::vector<SubPfaffian> sub_pfaffians(const SkewPMat& m, std::size_t order);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace tanscroll
