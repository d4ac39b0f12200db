#pragma once

#include <utility>
#include <vector>

#include "tanscroll/rational.hpp"

namespace tanscroll {

// Dense univariate polynomial over Q; coefficient k multiplies s^k. The
// coefficient vector never carries trailing zeros, so the zero polynomial is
// the empty vector and has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  // Multiplicity of the root s = 0 (zero for p(0) != 0). Undefined on zero.
  int order_at_zero() const;

  Rational operator()(const Rational& s) const;
  UPoly derivative() const;
  UPoly monic() const;
  // Clear denominators, divide by the integer content, make leading
  // coefficient positive.
  UPoly primitive() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws std::domain_error for a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, b) = monic(b); gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'), monic. Throws std::domain_error on p = 0.
UPoly squarefree_part(const UPoly& p);

}  // namespace tanscroll
