#include "tanscroll/tseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tanscroll {

TSeries::TSeries(std::string var, int order) : TSeries(std::move(var), order, {}, true) {}

TSeries::TSeries(std::string var, int order, std::vector<Rational> coeffs, bool exact)
    : var_(std::move(var)), order_(order), exact_(exact) {
  if (order < 1) throw std::invalid_argument("TSeries: order must be positive");
  for (std::size_t k = static_cast<std::size_t>(order); k < coeffs.size(); ++k)
    if (coeffs[k] != 0) exact_ = false;
  coeffs.resize(static_cast<std::size_t>(order));
  c_ = std::move(coeffs);
}

TSeries TSeries::variable(const std::string& var, int order) {
  return TSeries(var, order, {Rational(0), Rational(1)});
}

TSeries TSeries::constant(const Rational& c, const std::string& var, int order) { return TSeries(var, order, {c}); }

std::optional<int> TSeries::valuation() const {
  for (int k = 0; k < order_; ++k)
    if (c_[static_cast<std::size_t>(k)] != 0) return k;
  return std::nullopt;
}

int TSeries::degree_bound() const {
  for (int k = order_ - 1; k >= 0; --k)
    if (c_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

namespace {

void same_variable(const TSeries& a, const TSeries& b) {
  if (a.var() != b.var()) throw std::invalid_argument("TSeries: different variables");
}

}  // namespace

TSeries operator+(const TSeries& a, const TSeries& b) {
  same_variable(a, b);
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  // Truncating an exact series to a smaller cap may lose terms.
  const bool exact = a.exact_ && b.exact_ && a.degree_bound() < n && b.degree_bound() < n;
  return TSeries(a.var_, n, std::move(c), exact);
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries operator*(const Rational& c, const TSeries& a) {
  TSeries r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  same_variable(a, b);
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  const int da = a.degree_bound(), db = b.degree_bound();
  for (int i = 0; i <= da && i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= db && i + j < n; ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  const bool zero = da < 0 || db < 0;
  const bool exact = zero ? (da < 0 && a.exact_) || (db < 0 && b.exact_) : a.exact_ && b.exact_ && da + db < n;
  return TSeries(a.var_, n, std::move(c), exact);
}

bool operator==(const TSeries& a, const TSeries& b) {
  return a.var_ == b.var_ && a.order_ == b.order_ && a.exact_ == b.exact_ && a.c_ == b.c_;
}

TSeries TSeries::derivative() const {
  // d/dz loses the top known coefficient unless the series is exact.
  std::vector<Rational> c(static_cast<std::size_t>(order_));
  for (int k = 1; k < order_; ++k) c[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * k;
  return TSeries(var_, std::max(1, exact_ ? order_ : order_ - 1), std::move(c), exact_);
}

TSeries TSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("TSeries::inverse: zero constant term");
  std::vector<Rational> b(static_cast<std::size_t>(order_));
  const Rational inv = 1 / c_[0];
  b[0] = inv;
  for (int k = 1; k < order_; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = -inv * acc;
  }
  return TSeries(var_, order_, std::move(b), exact_ && degree_bound() == 0);
}

TSeries TSeries::compose(const TSeries& inner) const {
  if (inner.coeff(0) != 0) throw std::domain_error("TSeries::compose: inner series has a constant term");
  TSeries r(inner.var_, std::min(order_, inner.order_));
  for (int k = degree_bound(); k >= 0; --k) r = r * inner + TSeries::constant(coeff(k), inner.var_, r.order_);
  if (!exact_) r.exact_ = false;
  return r;
}

std::string TSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < order_; ++k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var_;
    if (k > 1) os << "^" << k;
  }
  if (!exact_) os << (first ? "" : " + ") << "O(" << var_ << "^" << order_ << ")";
  else if (first) os << "0";
  return os.str();
}

TSeries pow(const TSeries& a, unsigned e) {
  TSeries r = TSeries::constant(Rational(1), a.var(), a.order());
  for (unsigned k = 0; k < e; ++k) r = r * a;
  return r;
}

}  // namespace tanscroll
