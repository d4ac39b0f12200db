#include "tanscroll/bform.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanscroll {

BForm::BForm(int degree) : degree_(degree), c_(static_cast<std::size_t>(degree) + 1) {
  if (degree < 0) throw std::invalid_argument("BForm: negative degree");
}

BForm::BForm(std::vector<Rational> coeffs) : degree_(static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("BForm: empty coefficient list");
}

BForm BForm::monomial(const Rational& c, int s0_exp, int s1_exp) {
  BForm f(s0_exp + s1_exp);
  f.c_[static_cast<std::size_t>(s1_exp)] = c;
  return f;
}

bool BForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

BForm BForm::from_mpoly(const MPoly& p, std::string_view s0, std::string_view s1, int zero_degree) {
  if (p.is_zero()) return BForm(zero_degree);
  if (!p.is_homogeneous()) throw std::invalid_argument("BForm::from_mpoly: not homogeneous: " + p.to_string());
  const auto& vars = p.variables();
  int i0 = -1, i1 = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == s0) i0 = static_cast<int>(i);
    else if (vars[i] == s1) i1 = static_cast<int>(i);
  }
  BForm f(p.total_degree());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] && static_cast<int>(i) != i0 && static_cast<int>(i) != i1)
        throw std::invalid_argument("BForm::from_mpoly: unexpected variable " + vars[i]);
    const unsigned k = i1 >= 0 ? m[static_cast<std::size_t>(i1)] : 0u;
    f.c_[k] = c;
  }
  return f;
}

BForm BForm::homogenize(const UPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("BForm::homogenize: degree too small");
  BForm f(degree);
  for (int k = 0; k <= p.degree(); ++k) f.c_[static_cast<std::size_t>(k)] = p.coeff(k);
  return f;
}

MPoly BForm::to_mpoly(std::string_view s0, std::string_view s1) const {
  auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{std::string(s0), std::string(s1)});
  MPoly::Terms t;
  for (int k = 0; k <= degree_; ++k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c != 0) t.emplace(Monomial{static_cast<unsigned>(degree_ - k), static_cast<unsigned>(k)}, c);
  }
  return MPoly(std::move(vars), std::move(t));
}

UPoly BForm::dehomogenize() const { return UPoly(c_); }

Rational BForm::operator()(const Rational& s0, const Rational& s1) const {
  Rational acc = 0;
  std::vector<Rational> pow0(static_cast<std::size_t>(degree_) + 1);
  pow0[0] = 1;
  for (int k = 1; k <= degree_; ++k) pow0[static_cast<std::size_t>(k)] = pow0[static_cast<std::size_t>(k - 1)] * s0;
  Rational p1 = 1;
  for (int k = 0; k <= degree_; ++k) {
    acc += c_[static_cast<std::size_t>(k)] * pow0[static_cast<std::size_t>(degree_ - k)] * p1;
    p1 *= s1;
  }
  return acc;
}

int BForm::s0_multiplicity() const {
  if (is_zero()) throw std::domain_error("s0_multiplicity of the zero form");
  return degree_ - dehomogenize().degree();
}

int BForm::s1_multiplicity() const {
  if (is_zero()) throw std::domain_error("s1_multiplicity of the zero form");
  return dehomogenize().order_at_zero();
}

int BForm::distinct_root_count() const {
  if (is_zero()) throw std::domain_error("distinct_root_count of the zero form");
  const UPoly p = dehomogenize();
  return squarefree_part(p).degree() + (degree_ > p.degree() ? 1 : 0);
}

BForm BForm::normalized() const {
  if (is_zero()) return *this;
  const UPoly p = dehomogenize();
  BForm f = *this;
  f *= 1 / p.leading();
  return f;
}

BForm& BForm::operator+=(const BForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_) throw std::domain_error("BForm: adding forms of different degrees");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

BForm& BForm::operator-=(const BForm& o) { return *this += -o; }

BForm& BForm::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

BForm operator*(const BForm& a, const BForm& b) {
  BForm r(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

bool operator==(const BForm& a, const BForm& b) {
  const bool za = a.is_zero(), zb = b.is_zero();
  if (za || zb) return za && zb;
  return a.degree_ == b.degree_ && a.c_ == b.c_;
}

std::ostream& operator<<(std::ostream& os, const BForm& f) { return os << f.to_string(); }

BForm gcd(const BForm& a, const BForm& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const int k = std::min(a.s0_multiplicity(), b.s0_multiplicity());
  const UPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  return BForm::homogenize(g, g.degree() + k);
}

std::optional<BForm> exact_quotient(const BForm& a, const BForm& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by the zero form");
  if (a.is_zero()) return BForm(std::max(0, a.degree() - b.degree()));
  if (a.degree() < b.degree() || a.s0_multiplicity() < b.s0_multiplicity()) return std::nullopt;
  auto [q, r] = UPoly::divmod(a.dehomogenize(), b.dehomogenize());
  if (!r.is_zero()) return std::nullopt;
  return BForm::homogenize(q, a.degree() - b.degree());
}

std::optional<Rational> proportionality(const BForm& a, const BForm& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  std::optional<Rational> lambda;
  for (int k = 0; k <= a.degree(); ++k) {
    const Rational& x = a.coeff(k);
    const Rational& y = b.coeff(k);
    if ((x == 0) != (y == 0)) return std::nullopt;
    if (y == 0) continue;
    Rational r = x / y;
    if (lambda && *lambda != r) return std::nullopt;
    lambda = r;
  }
  return lambda;
}

}  // namespace tanscroll
