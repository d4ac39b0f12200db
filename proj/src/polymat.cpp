#include "tanscroll/polymat.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "tanscroll/determinant.hpp"

namespace tanscroll {

PMat::PMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

PMat::PMat(std::size_t rows, std::size_t cols, std::vector<MPoly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw std::invalid_argument("PMat: entry count does not match shape");
}

PMat PMat::jacobian(const std::vector<MPoly>& fs, const std::vector<std::string>& vars) {
  PMat j(fs.size(), vars.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < vars.size(); ++k) j(i, k) = fs[i].derivative(vars[k]);
  return j;
}

bool PMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const MPoly& p) { return p.is_zero(); });
}

PMat PMat::substitute(const MPoly::Bindings& b) const {
  PMat r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].substitute(b);
  return r;
}

RMat PMat::evaluate(const MPoly::Point& point) const {
  RMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).evaluate(point);
  return r;
}

PMat operator*(const PMat& a, const PMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PMat product: shape mismatch");
  PMat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      MPoly acc;
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

SkewPMat::SkewPMat(PMat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("SkewPMat: matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (!m_(i, i).is_zero()) throw std::invalid_argument("SkewPMat: nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (!(m_(i, j) + m_(j, i)).is_zero()) throw std::invalid_argument("SkewPMat: matrix is not antisymmetric");
  }
}

SkewPMat SkewPMat::from_upper(std::size_t n, const std::function<MPoly(std::size_t, std::size_t)>& upper) {
  PMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = upper(i, j);
      m(j, i) = -m(i, j);
    }
  return SkewPMat(std::move(m));
}

namespace {

void check_indices(const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
  for (auto i : idx)
    if (i >= bound) throw std::invalid_argument(std::string("minor: ") + what + " index out of range");
}

}  // namespace

MPoly minor(const PMat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  check_indices(rows, m.rows(), "row");
  check_indices(cols, m.cols(), "column");
  return laplace_determinant<MPoly>(
      rows.size(), [&](std::size_t i, std::size_t j) -> const MPoly& { return m(rows[i], cols[j]); },
      [](const MPoly& p) { return !p.is_zero(); }, MPoly(), MPoly(Rational(1)));
}

MPoly determinant(const PMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return minor(m, idx, idx);
}

std::size_t rank_at_point(const PMat& m, const MPoly::Point& point) { return rank(m.evaluate(point)); }

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices along curves

RMat FormMatrix::evaluate(const Rational& s0, const Rational& s1) const {
  RMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j)(s0, s1);
  return r;
}

BForm FormMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  return laplace_determinant<BForm>(
      rows.size(), [&](std::size_t i, std::size_t j) -> const BForm& { return (*this)(rows[i], cols[j]); },
      [](const BForm& f) { return !f.is_zero(); }, BForm(), BForm(std::vector<Rational>{Rational(1)}));
}

FormMatrix restrict_to_curve(const PMat& m, const Curve& curve) {
  MPoly::Bindings b;
  for (const auto& [name, form] : curve) b.emplace(name, form.to_mpoly());
  FormMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const MPoly& e = m(i, j);
      if (e.is_zero()) continue;
      for (const auto& v : e.support())
        if (!curve.count(v)) throw std::invalid_argument("restrict_to_curve: curve does not bind " + v);
      r(i, j) = BForm::from_mpoly(e.substitute(b));
    }
  return r;
}

std::size_t generic_rank(const FormMatrix& m) {
  // Any minor is a form of degree at most the sum of the row degrees.
  int bound = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) d = std::max(d, m(i, j).degree());
    bound += d;
  }
  const std::size_t cap = std::min(m.rows(), m.cols());
  std::size_t best = 0;
  for (int k = 0; k <= bound && best < cap; ++k) best = std::max(best, rank(m.evaluate(Rational(1), Rational(k))));
  return best;
}

BForm gcd_of_minors(const FormMatrix& m, std::size_t order, Execution exec) {
  const auto row_sets = combinations(m.rows(), order);
  const auto col_sets = combinations(m.cols(), order);
  const auto total = static_cast<long>(row_sets.size() * col_sets.size());
  const auto ncols = static_cast<long>(col_sets.size());
  auto minor_at = [&](long idx) {
    return m.minor(row_sets[static_cast<std::size_t>(idx / ncols)], col_sets[static_cast<std::size_t>(idx % ncols)]);
  };

  BForm acc;
  if (exec == Execution::serial) {
    for (long idx = 0; idx < total; ++idx) acc = gcd(acc, minor_at(idx));
    return acc;
  }
  // The normalised gcd is unique, so the reduction order does not matter.
#pragma omp parallel
  {
    BForm local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long idx = 0; idx < total; ++idx) local = gcd(local, minor_at(idx));
#pragma omp critical(tanscroll_gcd_of_minors)
    acc = gcd(acc, local);
  }
  return acc;
}

CurveRank rank_along_curve(const PMat& m, const Curve& curve, bool want_drop_locus, Execution exec) {
  const FormMatrix f = restrict_to_curve(m, curve);
  CurveRank r;
  r.generic_rank = generic_rank(f);
  if (want_drop_locus) {
    if (r.generic_rank == 0) throw std::domain_error("rank_along_curve: matrix vanishes identically along the curve");
    r.drop_locus = gcd_of_minors(f, r.generic_rank, exec);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pfaffians

namespace {

class PfaffianExpander {
 public:
  explicit PfaffianExpander(const SkewPMat& m) : m_(m) {}

  // Pfaffian of the principal submatrix on the index set `mask`.
  const MPoly& operator()(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    MPoly value;
    if (mask == 0) {
      value = MPoly(Rational(1));
    } else {
      const int first = std::countr_zero(mask);
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << first);
      int position = 0;
      for (std::uint32_t r = rest; r; r &= r - 1) {
        ++position;
        const int k = std::countr_zero(r);
        const MPoly& entry = m_(static_cast<std::size_t>(first), static_cast<std::size_t>(k));
        if (entry.is_zero()) continue;
        const MPoly& sub = (*this)(rest & ~(std::uint32_t{1} << k));
        if (sub.is_zero()) continue;
        if (position % 2 == 1)
          value += entry * sub;
        else
          value -= entry * sub;
      }
    }
    return memo_.emplace(mask, std::move(value)).first->second;
  }

 private:
  const SkewPMat& m_;
  std::unordered_map<std::uint32_t, MPoly> memo_;
};

}  // namespace

MPoly pfaffian(const SkewPMat& m) {
  if (m.dim() % 2) throw std::invalid_argument("pfaffian: odd dimension");
  if (m.dim() > 30) throw std::length_error("pfaffian: dimension too large");
  PfaffianExpander pf(m);
  return pf((std::uint32_t{1} << m.dim()) - 1);
}

std::vector<SubPfaffian> sub_pfaffians(const SkewPMat& m, std::size_t order) {
  if (order % 2) throw std::invalid_argument("sub_pfaffians: odd order");
  if (order > m.dim()) throw std::invalid_argument("sub_pfaffians: order exceeds dimension");
  PfaffianExpander pf(m);
  const std::uint32_t full = (std::uint32_t{1} << m.dim()) - 1;
  std::vector<SubPfaffian> out;
  for (auto& deleted : combinations(m.dim(), m.dim() - order)) {
    std::uint32_t mask = full;
    for (auto i : deleted) mask &= ~(std::uint32_t{1} << i);
    out.push_back({deleted, pf(mask)});
  }
  return out;
}

}  // namespace tanscroll
