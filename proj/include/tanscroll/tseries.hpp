#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanscroll/rational.hpp"

namespace tanscroll {

// Power series in one variable truncated at order N: coefficients c_0..c_{N-1}
// are known, everything from z^N on is unknown. A series is exact when it is a
// polynomial of degree < N, i.e. nothing was lost to truncation.
//
// Binary operations on series with different caps use the smaller cap.
class TSeries {
 public:
  // Zero series, exact.
  TSeries(std::string var, int order);
  // Coefficients beyond the cap are dropped (and the result is then inexact).
  TSeries(std::string var, int order, std::vector<Rational> coeffs, bool exact = true);
  static TSeries variable(const std::string& var, int order);
  static TSeries constant(const Rational& c, const std::string& var, int order);

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  bool exact() const { return exact_; }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  // Index of the first nonzero coefficient; nullopt if all known ones vanish.
  std::optional<int> valuation() const;
  // True when all known coefficients vanish (and the series is exact: zero).
  bool is_zero() const { return !valuation().has_value(); }

  TSeries derivative() const;
  // 1/a; throws std::domain_error when the constant term is zero.
  TSeries inverse() const;
  // this(inner); throws std::domain_error unless inner has zero constant term.
  TSeries compose(const TSeries& inner) const;

  // "z^2 + 3/2*z^4 + O(z^10)"; the O-term is omitted for exact series.
  std::string to_string() const;

  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const Rational& c, const TSeries& a);
  friend TSeries operator-(const TSeries& a) { return Rational(-1) * a; }
  // Equal known coefficients, cap and exactness.
  friend bool operator==(const TSeries& a, const TSeries& b);

 private:
  int degree_bound() const;  // highest nonzero index, -1 for zero
  std::string var_;
  int order_;
  std::vector<Rational> c_;
  bool exact_;
};

TSeries pow(const TSeries& a, unsigned e);

}  // namespace tanscroll
