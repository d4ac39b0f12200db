#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tanscroll/mpoly.hpp"
#include "tanscroll/upoly.hpp"

namespace tanscroll {

// Homogeneous binary form of a fixed degree d in (s0, s1). Coefficient k
// multiplies s0^(d-k) * s1^k, so dehomogenising at s0 = 1 gives the
// polynomial sum c_k s^k in s = s1/s0.
//
// The zero form keeps a nominal degree; adding a zero form of any degree to a
// nonzero one is allowed, adding two nonzero forms of different degree throws.
class BForm {
 public:
  BForm() : BForm(0) {}
  explicit BForm(int degree);
  explicit BForm(std::vector<Rational> coeffs);

  static BForm monomial(const Rational& c, int s0_exp, int s1_exp);
  // Throws std::invalid_argument if p is not homogeneous in (s0, s1) or
  // involves other variables. The zero polynomial maps to a zero form of
  // `zero_degree`.
  static BForm from_mpoly(const MPoly& p, std::string_view s0 = "s0", std::string_view s1 = "s1",
                          int zero_degree = 0);
  static BForm homogenize(const UPoly& p, int degree);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;

  MPoly to_mpoly(std::string_view s0 = "s0", std::string_view s1 = "s1") const;
  UPoly dehomogenize() const;  // s0 = 1
  Rational operator()(const Rational& s0, const Rational& s1) const;

  // Power of s0 dividing the form, i.e. multiplicity of the root (0:1).
  int s0_multiplicity() const;
  // Power of s1 dividing the form, i.e. multiplicity of the root (1:0).
  int s1_multiplicity() const;
  // Number of distinct roots on P^1 over the algebraic closure.
  int distinct_root_count() const;
  bool is_squarefree() const { return !is_zero() && distinct_root_count() == degree_; }
  // Scaled so that the coefficient of the highest power of s1 present is 1.
  BForm normalized() const;

  std::string to_string() const { return to_mpoly().to_string(); }

  BForm& operator+=(const BForm& o);
  BForm& operator-=(const BForm& o);
  BForm& operator*=(const Rational& c);
  friend BForm operator+(BForm a, const BForm& b) { return a += b; }
  friend BForm operator-(BForm a, const BForm& b) { return a -= b; }
  friend BForm operator-(BForm a) { return a *= Rational(-1); }
  friend BForm operator*(BForm a, const Rational& c) { return a *= c; }
  friend BForm operator*(const BForm& a, const BForm& b);
  friend bool operator==(const BForm& a, const BForm& b);

 private:
  int degree_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const BForm& f);

// Normalised gcd of two binary forms; gcd(0, b) = normalized(b), gcd(0,0) = 0.
BForm gcd(const BForm& a, const BForm& b);

// Exact quotient a / b; nullopt when b does not divide a.
std::optional<BForm> exact_quotient(const BForm& a, const BForm& b);

// lambda with a = lambda * b, when the forms are associates (both nonzero).
std::optional<Rational> proportionality(const BForm& a, const BForm& b);

}  // namespace tanscroll
