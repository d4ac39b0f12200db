#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tanscroll/rational.hpp"
#include "tanscroll/upoly.hpp"

namespace tanscroll {

using Monomial = std::vector<unsigned>;

// Graded lexicographic order, greatest first; ties broken by the declared
// variable order (earlier variable dominates).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over Q with named variables.
//
// Every polynomial carries the ordered list of variable names its exponent
// vectors refer to. Binary operations on polynomials over different variable
// lists work over the union (left operand's order first), so mixing rings is
// always allowed. Polynomials created through make_variables() share one list
// and skip the merge entirely. Zero coefficients are never stored.
class MPoly {
 public:
  using VarList = std::shared_ptr<const std::vector<std::string>>;
  using Terms = std::map<Monomial, Rational, GrlexGreater>;
  using Bindings = std::map<std::string, MPoly, std::less<>>;
  using Point = std::map<std::string, Rational, std::less<>>;

  MPoly();
  MPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT
  MPoly(VarList vars, Terms terms);

  static MPoly var(std::string_view name);
  static MPoly zero_in(const VarList& vars);

  // Parse the canonical textual form ("3*x1^2*x2^2 - 4*x0*x2^3 + 3/2"). The
  // variables of `ring` come first in the result's variable order, unknown
  // names are appended in order of appearance.
  static MPoly parse(std::string_view text, const std::vector<std::string>& ring = {});

  const std::vector<std::string>& variables() const { return *vars_; }
  const VarList& var_list() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term for constants; throws otherwise.
  Rational constant_value() const;

  int total_degree() const;
  int degree_in(std::string_view v) const;
  bool is_homogeneous() const;
  // Names of variables that occur with a positive exponent, in ring order.
  std::vector<std::string> support() const;
  Rational leading_coefficient() const;

  MPoly derivative(std::string_view v) const;
  // Exact composition; unbound variables are retained.
  MPoly substitute(const Bindings& bindings) const;
  // Throws std::invalid_argument if a variable in the support is unbound.
  Rational evaluate(const Point& point) const;
  MPoly rename(const std::map<std::string, std::string, std::less<>>& names) const;

  // Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coefficient_in(std::string_view v, unsigned k) const;
  // Sum of the terms whose degree in `vars` equals `degree`.
  MPoly homogeneous_part(const std::vector<std::string>& vars, int degree) const;

  // The same polynomial expressed over `vars`, which must contain the support.
  MPoly over(const VarList& vars) const;

  std::string to_string() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  // Semantic equality, independent of the variable lists.
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  static VarList merge(const VarList& a, const VarList& b);
  int index_of(std::string_view v) const;

  VarList vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

MPoly pow(const MPoly& p, unsigned e);

// Variables sharing a single variable list.
std::vector<MPoly> make_variables(const std::vector<std::string>& names);

// Partial derivatives in the order of `vars`.
std::vector<MPoly> gradient(const MPoly& p, const std::vector<std::string>& vars);

inline MPoly substitute(const MPoly& p, const MPoly::Bindings& b) { return p.substitute(b); }

// Univariate views. `to_upoly` throws std::invalid_argument when p involves
// any variable other than `v`.
bool is_univariate_in(const MPoly& p, std::string_view v);
UPoly to_upoly(const MPoly& p, std::string_view v);
MPoly from_upoly(const UPoly& p, std::string_view v);

// Monic gcd of two polynomials in the same single variable; gcd(0, 0) = 0.
MPoly gcd_univariate(const MPoly& a, const MPoly& b);
// p / gcd(p, p'), monic. Throws std::domain_error on p = 0.
MPoly squarefree_part(const MPoly& p);

// lambda with a = lambda * b, when both are nonzero and proportional.
std::optional<Rational> proportionality(const MPoly& a, const MPoly& b);

// Sylvester resultant of a and b with respect to `v`; the coefficients may
// involve other variables. Throws std::domain_error if either input is zero.
MPoly resultant(const MPoly& a, const MPoly& b, std::string_view v);

}  // namespace tanscroll
